#include "mfs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mfs/baselines.hpp"
#include "mfs/errors.hpp"
#include "mfs/recovery.hpp"
#include "mfs/rng.hpp"
#include "mfs/spectral.hpp"
#include "mfs/transforms.hpp"

using json = nlohmann::json;

namespace mfs {

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::RecoverySweep: return "recovery_sweep";
    case ExperimentKind::CosineSweep: return "cosine_sweep";
    case ExperimentKind::NoiseSweep: return "noise_sweep";
    case ExperimentKind::Image: return "image";
  }
  return "?";
}

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::MfSparse: return "mf_sparse";
    case Algorithm::Ght: return "ght";
    case Algorithm::OneStep: return "one_step";
    case Algorithm::RmStyle: return "rm_style";
  }
  return "?";
}

ExperimentKind experiment_from_name(const std::string& name) {
  for (auto kind : {ExperimentKind::RecoverySweep, ExperimentKind::CosineSweep,
                    ExperimentKind::NoiseSweep, ExperimentKind::Image})
    if (name == experiment_name(kind)) return kind;
  throw ConfigError("experiment: unknown kind '" + name + "'");
}

Algorithm algorithm_from_name(const std::string& name) {
  for (auto alg : {Algorithm::MfSparse, Algorithm::Ght, Algorithm::OneStep, Algorithm::RmStyle})
    if (name == algorithm_name(alg)) return alg;
  throw ConfigError("algorithms: unknown algorithm '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (n <= 0) throw ConfigError("n: must be positive");
  if (q <= 0) throw ConfigError("q: must be positive");
  if (q > n) throw ConfigError("q: must be <= n");
  if (s <= 0 || s > n) throw ConfigError("s: must be in [1, n]");
  if (k_list.empty()) throw ConfigError("k_list: must be nonempty");
  for (Index k : k_list)
    if (k <= 0) throw ConfigError("k_list: entries must be positive");
  if (sigma_list.empty()) throw ConfigError("sigma_list: must be nonempty");
  for (double sg : sigma_list)
    if (sg < 0.0) throw ConfigError("sigma_list: entries must be >= 0");
  if (norm_list.empty()) throw ConfigError("norm_list: must be nonempty");
  for (double nm : norm_list)
    if (nm <= 0.0) throw ConfigError("norm_list: entries must be positive");
  if (algorithms.empty()) throw ConfigError("algorithms: must be nonempty");
  for (Algorithm alg : algorithms)
    if (alg == Algorithm::Ght && link != LinkType::RealSine)
      throw ConfigError("algorithms: ght requires the real_sine link");
  if (trials < 1) throw ConfigError("trials: must be >= 1");
  if (success_threshold <= 0.0) throw ConfigError("success_threshold: must be positive");
  if (coarse_points < 3) throw ConfigError("coarse_points: must be >= 3");
  if (refine_rounds < 0 || refine_factor < 2)
    throw ConfigError("refine_rounds/refine_factor: invalid refinement schedule");
  if (threads < 0) throw ConfigError("threads: must be >= 0");
  if (kind == ExperimentKind::Image) {
    if (image_width < 2 || (image_width & (image_width - 1)) != 0)
      throw ConfigError("image_width: must be a power of 2");
    if (image_path.empty() && s >= image_width * image_width)
      throw ConfigError("s: must be < w*w, recovery is undefined without sparsity");
  }
}

SparseSignal synthesize_signal(Index n, Index s, double target_norm, std::uint64_t seed) {
  if (s <= 0 || s > n) throw InvalidSparsity("synthesize_signal: s out of range");
  CounterRng rng(seed);

  // random support: Fisher-Yates prefix
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (Index i = 0; i < s; ++i) {
    const Index j = i + static_cast<Index>(rng.next_u64() % static_cast<std::uint64_t>(n - i));
    std::swap(perm[i], perm[j]);
  }

  SparseSignal x;
  x.values = Eigen::VectorXd::Zero(n);
  x.sparsity = s;
  x.norm_bound = target_norm;
  for (Index i = 0; i < s; ++i) x.values[perm[i]] = rng.next_normal();
  const double norm = x.values.norm();
  if (norm > 0.0) x.values *= target_norm / norm;
  return x;
}

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// rel_error is always well defined for nonzero truth; cosine of an exactly
// zero estimate is recorded as 0.
std::pair<double, double> metrics_safe(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
  const double tn = truth.norm();
  const double rel = (estimate - truth).norm() / tn;
  const double en = estimate.norm();
  const double cosine = en == 0.0 ? 0.0 : estimate.dot(truth) / (en * tn);
  return {rel, cosine};
}

ToneGrid grid_for(const ExperimentConfig& cfg, double signal_norm) {
  ToneGrid grid;
  grid.omega = cfg.omega_factor * signal_norm;
  grid.coarse_points = cfg.coarse_points;
  grid.refine_rounds = cfg.refine_rounds;
  grid.refine_factor = cfg.refine_factor;
  return grid;
}

Eigen::VectorXd rm_style_tones(const FeatureVector& y, const Eigen::MatrixXd& blocks,
                               const ToneGrid& grid) {
  const Index k = blocks.rows();
  const Index q = blocks.cols();
  Eigen::VectorXd z_hat(q);
  ToneSamples samples;
  for (Index l = 0; l < q; ++l) {
    samples.t = blocks.col(l);
    if (y.link == LinkType::ComplexExp) {
      samples.u_complex.resize(k);
      for (Index r = 0; r < k; ++r) samples.u_complex[r] = y.cdata[r * q + l];
    } else {
      samples.u_real.resize(k);
      for (Index r = 0; r < k; ++r) samples.u_real[r] = y.rdata[r * q + l];
    }
    z_hat[l] = uniform_grid_estimator(samples, grid);
  }
  return z_hat;
}

struct CellParams {
  Index cell;
  Index k;
  double sigma;
  double norm;
};

void run_trial(const ExperimentConfig& cfg, const CellParams& cell, int trial,
               std::vector<TrialRow>& out_rows, size_t row_base) {
  const std::uint64_t trial_seed =
      derive_seed(cfg.master_seed, static_cast<std::uint64_t>(cell.cell), static_cast<std::uint64_t>(trial));
  const std::uint64_t op_seed = derive_seed(trial_seed, 1, 0);
  const std::uint64_t x_seed = derive_seed(trial_seed, 2, 0);
  const std::uint64_t noise_seed = derive_seed(trial_seed, 3, 0);

  const SparseSignal x = synthesize_signal(cfg.n, cfg.s, cell.norm, x_seed);
  const ToneGrid grid = grid_for(cfg, cell.norm);

  OperatorSpec spec;
  spec.n = cfg.n;
  spec.q = cfg.q;
  spec.k = cell.k;
  spec.inner_dist = cfg.inner_dist;
  spec.block_dist = cfg.block_dist;
  spec.uniform_half_width = cfg.uniform_half_width;
  spec.seed = op_seed;

  // one random operator and one feature vector shared by the random-D
  // algorithms, so per-trial comparisons see the same data
  SensingOperator op;
  FeatureVector y;
  bool have_random_op = false;
  for (Algorithm alg : cfg.algorithms)
    if (alg != Algorithm::RmStyle) have_random_op = true;
  if (have_random_op) {
    op = make_operator(spec);
    y = forward(op, x, cfg.link, cell.sigma, noise_seed);
  }

  for (size_t a = 0; a < cfg.algorithms.size(); ++a) {
    const Algorithm alg = cfg.algorithms[a];
    TrialRow row;
    row.algorithm = alg;
    row.cell = cell.cell;
    row.trial = trial;
    row.record.n = cfg.n;
    row.record.q = cfg.q;
    row.record.k = cell.k;
    row.record.s = cfg.s;
    row.record.sigma = cell.sigma;
    row.record.norm = cell.norm;
    row.record.link = cfg.link;
    row.record.seed = trial_seed;

    const double t0 = now_ms();
    try {
      Eigen::VectorXd estimate;
      switch (alg) {
        case Algorithm::MfSparse:
          estimate = mf_sparse(y, op, grid, cfg.s).estimate.values;
          break;
        case Algorithm::Ght:
          estimate = ght(y, op, cfg.s).estimate.values;
          break;
        case Algorithm::OneStep:
          estimate = one_step_threshold(y, op, cfg.s).values;
          break;
        case Algorithm::RmStyle: {
          // same B, deterministic uniform-grid blocks spanning the band
          SensingOperator rm_op = make_operator(spec);
          rm_op.blocks = uniform_blocks(cell.k, cfg.q, M_PI / grid.omega);
          const FeatureVector rm_y = forward(rm_op, x, cfg.link, cell.sigma, noise_seed);
          const Eigen::VectorXd z_hat = rm_style_tones(rm_y, rm_op.blocks, grid);
          DenseRefMap inner(rm_op.inner);
          estimate = cosamp(z_hat, inner, cfg.s).estimate.values;
          break;
        }
      }
      const auto [rel, cosine] = metrics_safe(estimate, x.values);
      row.record.rel_error = rel;
      row.record.cosine = cosine;
      row.record.success = rel < cfg.success_threshold;
    } catch (const std::exception& e) {
      const std::string what = e.what();
      row.status = what.substr(0, what.find(':'));
      row.record.rel_error = std::numeric_limits<double>::quiet_NaN();
      row.record.cosine = std::numeric_limits<double>::quiet_NaN();
      row.record.success = false;
    }
    row.record.elapsed_ms = now_ms() - t0;
    out_rows[row_base + a] = std::move(row);
  }
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kind == ExperimentKind::Image)
    throw ConfigError("experiment: image configs go through run_image_experiment");

  std::vector<CellParams> cells;
  Index cell_index = 0;
  for (Index k : cfg.k_list)
    for (double sigma : cfg.sigma_list)
      for (double norm : cfg.norm_list) cells.push_back({cell_index++, k, sigma, norm});

  const size_t algs = cfg.algorithms.size();
  ResultTable table;
  table.config = cfg;
  table.rows.resize(cells.size() * static_cast<size_t>(cfg.trials) * algs);

  const size_t jobs = cells.size() * static_cast<size_t>(cfg.trials);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      cfg.threads == 0 ? hw : std::min<unsigned>(static_cast<unsigned>(cfg.threads), hw);

  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    for (size_t job = next.fetch_add(1); job < jobs; job = next.fetch_add(1)) {
      const size_t c = job / static_cast<size_t>(cfg.trials);
      const int trial = static_cast<int>(job % static_cast<size_t>(cfg.trials));
      run_trial(cfg, cells[c], trial, table.rows, job * algs);
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // per (cell, algorithm) aggregates; error rows count toward trials but are
  // excluded from the means
  for (const CellParams& cell : cells) {
    for (size_t a = 0; a < algs; ++a) {
      CellSummary sum{};
      sum.algorithm = cfg.algorithms[a];
      sum.k = cell.k;
      sum.sigma = cell.sigma;
      sum.norm = cell.norm;
      sum.trials = cfg.trials;
      int ok = 0, succ = 0;
      double cos_sum = 0.0, rel_sum = 0.0;
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialRow& row =
            table.rows[(static_cast<size_t>(cell.cell) * cfg.trials + t) * algs + a];
        if (row.status != "ok") continue;
        ++ok;
        if (row.record.success) ++succ;
        cos_sum += row.record.cosine;
        rel_sum += row.record.rel_error;
      }
      sum.success_rate = static_cast<double>(succ) / cfg.trials;
      sum.mean_cosine = ok > 0 ? cos_sum / ok : std::numeric_limits<double>::quiet_NaN();
      sum.mean_rel_error = ok > 0 ? rel_sum / ok : std::numeric_limits<double>::quiet_NaN();
      table.summary.push_back(sum);
    }
  }
  return table;
}

Eigen::MatrixXd synthetic_test_image(Index w) {
  Eigen::MatrixXd img(w, w);
  for (Index r = 0; r < w; ++r)
    for (Index c = 0; c < w; ++c) {
      double v = 40.0 + 80.0 * static_cast<double>(r + c) / (2 * w);  // smooth ramp
      const double dr = static_cast<double>(r) - 0.35 * w;
      const double dc = static_cast<double>(c) - 0.4 * w;
      if (dr * dr + dc * dc < 0.04 * w * w) v = 220.0;                         // disk
      if (r > 0.6 * w && r < 0.85 * w && c > 0.55 * w && c < 0.9 * w) v = 10.0;  // dark box
      if (std::abs(static_cast<double>(r) - static_cast<double>(c)) < 0.03 * w) v = 160.0;  // bar
      img(r, c) = v;
    }
  return img;
}

ImageExperimentResult run_image_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kind != ExperimentKind::Image) throw ConfigError("experiment: expected kind 'image'");

  Eigen::MatrixXd image =
      cfg.image_path.empty() ? synthetic_test_image(cfg.image_width) : read_pgm(cfg.image_path);
  const Index w = image.rows();
  if (image.cols() != w || (w & (w - 1)) != 0)
    throw ConfigError("image: must be square with power-of-2 side");
  const Index n = w * w;
  if (cfg.s >= n) throw ConfigError("s: must be < w*w, recovery is undefined without sparsity");
  if (cfg.q > n) throw ConfigError("q: must be <= w*w");

  // work in [0, 1] so the tone band stays modest
  const Eigen::MatrixXd scaled = image / 255.0;
  const SparsifyResult sp = sparsify_image(scaled, cfg.s, 1.0);

  ImageExperimentResult result;
  result.target = sp.approximation * 255.0;
  result.ceiling_psnr = psnr(image, result.target, 255.0);

  const Eigen::VectorXd coeffs =
      Eigen::Map<const Eigen::VectorXd>(sp.coefficients.data(), sp.coefficients.size());
  const auto phi = make_structured_operator(n, cfg.q, derive_seed(cfg.master_seed, 0, 0));
  const ToneGrid grid = grid_for(cfg, coeffs.norm());
  const double sigma = cfg.sigma_list.front();

  for (size_t ki = 0; ki < cfg.k_list.size(); ++ki) {
    const Index k = cfg.k_list[ki];
    Eigen::MatrixXd blocks(k, cfg.q);
    CounterRng rng(derive_seed(cfg.master_seed, ki + 1, 0));
    for (Index r = 0; r < k; ++r)
      for (Index l = 0; l < cfg.q; ++l) blocks(r, l) = rng.next_normal();

    const FeatureVector y = forward_with_map(*phi, blocks, coeffs, cfg.link, sigma,
                                             derive_seed(cfg.master_seed, ki + 1, 1));
    const MfSparseResult rec = mf_sparse_with_map(y, *phi, blocks, grid, cfg.s);

    ImageKResult kr;
    kr.k = k;
    const Eigen::MatrixXd rec_coeffs =
        Eigen::Map<const Eigen::MatrixXd>(rec.estimate.values.data(), w, w);
    kr.reconstruction = haar2d_inverse(rec_coeffs) * 255.0;
    kr.psnr = psnr(result.target, kr.reconstruction, 255.0);
    kr.psnr_input = psnr(image, kr.reconstruction, 255.0);
    result.per_k.push_back(std::move(kr));
  }
  return result;
}

// --- serialization -------------------------------------------------------

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

const char* inner_dist_name(InnerDist d) {
  return d == InnerDist::GaussianVar1OverQ ? "gaussian_var_1_over_q" : "gaussian_var_1_over_sqrt_q";
}
const char* block_dist_name(BlockDist d) {
  return d == BlockDist::UniformSym ? "uniform_sym" : "standard_normal";
}

InnerDist inner_dist_from_name(const std::string& s) {
  if (s == "gaussian_var_1_over_q") return InnerDist::GaussianVar1OverQ;
  if (s == "gaussian_var_1_over_sqrt_q") return InnerDist::GaussianVar1OverSqrtQ;
  throw ConfigError("inner_dist: unknown value '" + s + "'");
}
BlockDist block_dist_from_name(const std::string& s) {
  if (s == "uniform_sym") return BlockDist::UniformSym;
  if (s == "standard_normal") return BlockDist::StandardNormal;
  throw ConfigError("block_dist: unknown value '" + s + "'");
}

}  // namespace

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  ExperimentConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") cfg.kind = experiment_from_name(value.get<std::string>());
      else if (key == "n") cfg.n = value.get<Index>();
      else if (key == "q") cfg.q = value.get<Index>();
      else if (key == "s") cfg.s = value.get<Index>();
      else if (key == "k_list") cfg.k_list = value.get<std::vector<Index>>();
      else if (key == "sigma_list") cfg.sigma_list = value.get<std::vector<double>>();
      else if (key == "norm_list") cfg.norm_list = value.get<std::vector<double>>();
      else if (key == "link") cfg.link = link_from_name(value.get<std::string>());
      else if (key == "algorithms") {
        cfg.algorithms.clear();
        for (const auto& name : value) cfg.algorithms.push_back(algorithm_from_name(name.get<std::string>()));
      } else if (key == "trials") cfg.trials = value.get<int>();
      else if (key == "master_seed") cfg.master_seed = value.get<std::uint64_t>();
      else if (key == "success_threshold") cfg.success_threshold = value.get<double>();
      else if (key == "inner_dist") cfg.inner_dist = inner_dist_from_name(value.get<std::string>());
      else if (key == "block_dist") cfg.block_dist = block_dist_from_name(value.get<std::string>());
      else if (key == "uniform_half_width") cfg.uniform_half_width = value.get<double>();
      else if (key == "omega_factor") cfg.omega_factor = value.get<double>();
      else if (key == "coarse_points") cfg.coarse_points = value.get<int>();
      else if (key == "refine_rounds") cfg.refine_rounds = value.get<int>();
      else if (key == "refine_factor") cfg.refine_factor = value.get<int>();
      else if (key == "threads") cfg.threads = value.get<int>();
      else if (key == "out") cfg.out_prefix = value.get<std::string>();
      else if (key == "image") cfg.image_path = value.get<std::string>();
      else if (key == "image_width") cfg.image_width = value.get<Index>();
      else throw ConfigError(key + ": unknown config field");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has wrong type: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = experiment_name(cfg.kind);
  j["n"] = cfg.n;
  j["q"] = cfg.q;
  j["s"] = cfg.s;
  j["k_list"] = cfg.k_list;
  j["sigma_list"] = cfg.sigma_list;
  j["norm_list"] = cfg.norm_list;
  j["link"] = link_name(cfg.link);
  std::vector<std::string> algs;
  for (Algorithm a : cfg.algorithms) algs.emplace_back(algorithm_name(a));
  j["algorithms"] = algs;
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["success_threshold"] = cfg.success_threshold;
  j["inner_dist"] = inner_dist_name(cfg.inner_dist);
  j["block_dist"] = block_dist_name(cfg.block_dist);
  j["uniform_half_width"] = cfg.uniform_half_width;
  j["omega_factor"] = cfg.omega_factor;
  j["coarse_points"] = cfg.coarse_points;
  j["refine_rounds"] = cfg.refine_rounds;
  j["refine_factor"] = cfg.refine_factor;
  j["threads"] = cfg.threads;
  j["out"] = cfg.out_prefix;
  if (cfg.kind == ExperimentKind::Image) {
    j["image"] = cfg.image_path;
    j["image_width"] = cfg.image_width;
  }
  return j.dump(2) + "\n";
}

void write_results_csv(const std::string& path, const ResultTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "experiment,algorithm,n,q,k,s,sigma,norm,link,cell,trial,seed,status,"
         "rel_error,cosine,success,elapsed_ms\n";
  for (const TrialRow& row : table.rows) {
    const TrialRecord& r = row.record;
    out << experiment_name(table.config.kind) << ',' << algorithm_name(row.algorithm) << ',' << r.n
        << ',' << r.q << ',' << r.k << ',' << r.s << ',' << format_double(r.sigma) << ','
        << format_double(r.norm) << ',' << link_name(r.link) << ',' << row.cell << ',' << row.trial
        << ',' << r.seed << ',' << row.status << ',' << format_double(r.rel_error) << ','
        << format_double(r.cosine) << ',' << (r.success ? 1 : 0) << ','
        << format_double(r.elapsed_ms) << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

void write_summary_csv(const std::string& path, const ResultTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "experiment,algorithm,k,sigma,norm,trials,success_rate,mean_cosine,mean_rel_error\n";
  for (const CellSummary& s : table.summary)
    out << experiment_name(table.config.kind) << ',' << algorithm_name(s.algorithm) << ',' << s.k
        << ',' << format_double(s.sigma) << ',' << format_double(s.norm) << ',' << s.trials << ','
        << format_double(s.success_rate) << ',' << format_double(s.mean_cosine) << ','
        << format_double(s.mean_rel_error) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

void write_config_sidecar(const std::string& path, const ExperimentConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << config_to_json(cfg);
  if (!out) throw IoError("write failed for " + path);
}

Eigen::VectorXd read_vector_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    vals.push_back(std::stod(line));
  }
  return Eigen::Map<const Eigen::VectorXd>(vals.data(), static_cast<Index>(vals.size()));
}

void write_vector_csv(const std::string& path, const Eigen::VectorXd& v) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (Index i = 0; i < v.size(); ++i) out << format_double(v[i]) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

Eigen::VectorXcd read_cvector_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::complex<double>> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError(path + ": expected two comma-separated columns");
    vals.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return Eigen::Map<const Eigen::VectorXcd>(vals.data(), static_cast<Index>(vals.size()));
}

void write_cvector_csv(const std::string& path, const Eigen::VectorXcd& v) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (Index i = 0; i < v.size(); ++i)
    out << format_double(v[i].real()) << ',' << format_double(v[i].imag()) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

Eigen::MatrixXd read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
    if (!rows.empty() && row.size() != rows.front().size())
      throw IoError(path + ": ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  return m;
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) out << (c ? "," : "") << format_double(m(r, c));
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace mfs
