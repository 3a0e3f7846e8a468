// Command-line front end: generate operators/signals, compute feature maps,
// run the two-stage recovery, and drive the Monte Carlo experiment harness.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "mfs/baselines.hpp"
#include "mfs/embed.hpp"
#include "mfs/errors.hpp"
#include "mfs/harness.hpp"
#include "mfs/pipeline.hpp"
#include "mfs/rng.hpp"
#include "mfs/transforms.hpp"

namespace {

using namespace mfs;

struct OperatorFiles {
  std::string inner, blocks, meta;
  explicit OperatorFiles(const std::string& prefix)
      : inner(prefix + "_inner.csv"), blocks(prefix + "_blocks.csv"), meta(prefix + "_meta.json") {}
};

int cmd_generate(Index n, Index q, Index k, Index s, double norm, std::uint64_t seed,
                 const std::string& inner_dist, const std::string& block_dist, double half_width,
                 const std::string& out) {
  OperatorSpec spec;
  spec.n = n;
  spec.q = q;
  spec.k = k;
  spec.inner_dist = inner_dist == "gaussian_var_1_over_sqrt_q" ? InnerDist::GaussianVar1OverSqrtQ
                                                               : InnerDist::GaussianVar1OverQ;
  spec.block_dist = block_dist == "uniform_sym" ? BlockDist::UniformSym : BlockDist::StandardNormal;
  spec.uniform_half_width = half_width;
  spec.seed = seed;

  const SensingOperator op = make_operator(spec);
  const SparseSignal x = synthesize_signal(n, s, norm, derive_seed(seed, 99, 0));
  validate(op, x);

  const OperatorFiles files(out);
  write_matrix_csv(files.inner, op.inner);
  write_matrix_csv(files.blocks, op.blocks);
  write_vector_csv(out + "_signal.csv", x.values);
  std::ofstream meta(files.meta);
  meta << "{\n  \"n\": " << n << ",\n  \"q\": " << q << ",\n  \"k\": " << k << ",\n  \"s\": " << s
       << ",\n  \"norm\": " << format_double(norm) << ",\n  \"seed\": " << seed << "\n}\n";
  std::cout << "wrote " << files.inner << ", " << files.blocks << ", " << out << "_signal.csv\n";
  return 0;
}

SensingOperator load_operator(const std::string& prefix) {
  const OperatorFiles files(prefix);
  SensingOperator op;
  op.inner = read_matrix_csv(files.inner);
  op.blocks = read_matrix_csv(files.blocks);
  if (op.blocks.cols() != op.inner.rows())
    throw IoError("operator files disagree on q: " + files.inner + " vs " + files.blocks);
  return op;
}

int cmd_embed(const std::string& op_prefix, const std::string& signal_path, const std::string& link,
              double sigma, std::uint64_t noise_seed, const std::string& out) {
  const SensingOperator op = load_operator(op_prefix);
  SparseSignal x;
  x.values = read_vector_csv(signal_path);
  const LinkType lt = link_from_name(link);
  const FeatureVector y = forward(op, x, lt, sigma, noise_seed);
  if (lt == LinkType::ComplexExp)
    write_cvector_csv(out, y.cdata);
  else
    write_vector_csv(out, y.rdata);
  std::cout << "wrote " << out << " (" << y.size() << " samples, " << link << ")\n";
  return 0;
}

int cmd_recover(const std::string& op_prefix, const std::string& features_path,
                const std::string& link, Index s, double omega, int coarse_points,
                int refine_rounds, int refine_factor, const std::string& out) {
  const SensingOperator op = load_operator(op_prefix);
  FeatureVector y;
  y.link = link_from_name(link);
  if (y.link == LinkType::ComplexExp)
    y.cdata = read_cvector_csv(features_path);
  else
    y.rdata = read_vector_csv(features_path);

  ToneGrid grid;
  grid.omega = omega;
  grid.coarse_points = coarse_points;
  grid.refine_rounds = refine_rounds;
  grid.refine_factor = refine_factor;

  const MfSparseResult res = mf_sparse(y, op, grid, s);
  write_vector_csv(out, res.estimate.values);
  std::cout << "wrote " << out << "\n"
            << "tone stage: " << format_double(res.diagnostics.tone_ms) << " ms, mean residual "
            << format_double(res.diagnostics.tone_residual_mean) << "\n"
            << "recovery stage: " << format_double(res.diagnostics.recovery_ms)
            << " ms, converged=" << (res.diagnostics.cosamp_converged ? "yes" : "no") << "\n";
  if (res.diagnostics.omega_too_small)
    std::cout << "warning: >1% of tone estimates sit at the band edge; omega is likely too small\n";
  return 0;
}

int cmd_experiment(const std::string& config_path, std::uint64_t seed_override, bool has_seed,
                   const std::string& out_override, int threads_override) {
  ExperimentConfig cfg = config_from_json_file(config_path);
  if (has_seed) cfg.master_seed = seed_override;
  if (!out_override.empty()) cfg.out_prefix = out_override;
  if (threads_override >= 0) cfg.threads = threads_override;
  if (cfg.out_prefix.empty()) throw ConfigError("out: no output prefix given (config or --out)");

  const ResultTable table = run_experiment(cfg);
  write_results_csv(cfg.out_prefix + "_trials.csv", table);
  write_summary_csv(cfg.out_prefix + "_summary.csv", table);
  write_config_sidecar(cfg.out_prefix + "_config.json", cfg);
  std::cout << "wrote " << cfg.out_prefix << "_trials.csv (" << table.rows.size() << " rows), "
            << cfg.out_prefix << "_summary.csv, " << cfg.out_prefix << "_config.json\n";
  return 0;
}

int cmd_image(const std::string& config_path, std::uint64_t seed_override, bool has_seed,
              const std::string& out_override) {
  ExperimentConfig cfg = config_from_json_file(config_path);
  if (has_seed) cfg.master_seed = seed_override;
  if (!out_override.empty()) cfg.out_prefix = out_override;
  if (cfg.out_prefix.empty()) throw ConfigError("out: no output prefix given (config or --out)");

  const ImageExperimentResult res = run_image_experiment(cfg);
  write_pgm(cfg.out_prefix + "_target.pgm", res.target);
  std::cout << "s-term ceiling PSNR: " << format_double(res.ceiling_psnr) << " dB\n";
  for (const ImageKResult& kr : res.per_k) {
    const std::string path = cfg.out_prefix + "_k" + std::to_string(kr.k) + ".pgm";
    write_pgm(path, kr.reconstruction);
    std::cout << "k=" << kr.k << ": PSNR vs target " << format_double(kr.psnr) << " dB, vs input "
              << format_double(kr.psnr_input) << " dB -> " << path << "\n";
  }
  write_config_sidecar(cfg.out_prefix + "_config.json", cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse recovery from random sinusoidal feature maps"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a sensing operator and sparse signal");
  Index g_n = 4096, g_q = 400, g_k = 6, g_s = 30;
  double g_norm = 1.0, g_T = 20.0;
  std::uint64_t g_seed = 0;
  std::string g_inner = "gaussian_var_1_over_q", g_block = "standard_normal", g_out = "operator";
  gen->add_option("--n", g_n, "signal dimension");
  gen->add_option("--q", g_q, "inner projection dimension");
  gen->add_option("--k", g_k, "number of diagonal blocks");
  gen->add_option("--s", g_s, "sparsity");
  gen->add_option("--norm", g_norm, "signal l2 norm");
  gen->add_option("--seed", g_seed, "seed");
  gen->add_option("--inner-dist", g_inner, "gaussian_var_1_over_q | gaussian_var_1_over_sqrt_q");
  gen->add_option("--block-dist", g_block, "standard_normal | uniform_sym");
  gen->add_option("--T", g_T, "half-width for uniform_sym blocks");
  gen->add_option("--out", g_out, "output file prefix");

  // embed
  auto* emb = app.add_subcommand("embed", "Compute the feature map y = link(DBx) + e");
  std::string e_op = "operator", e_signal = "operator_signal.csv", e_link = "real_sine",
              e_out = "features.csv";
  double e_sigma = 0.0;
  std::uint64_t e_seed = 1;
  emb->add_option("--operator", e_op, "operator file prefix");
  emb->add_option("--signal", e_signal, "signal CSV");
  emb->add_option("--link", e_link, "complex_exp | real_sine");
  emb->add_option("--sigma", e_sigma, "noise standard deviation");
  emb->add_option("--seed", e_seed, "noise seed");
  emb->add_option("--out", e_out, "features CSV");

  // recover
  auto* rec = app.add_subcommand("recover", "Two-stage recovery from features");
  std::string r_op = "operator", r_features = "features.csv", r_link = "real_sine",
              r_out = "estimate.csv";
  Index r_s = 30;
  double r_omega = 3.0;
  int r_coarse = 4096, r_rounds = 3, r_factor = 16;
  rec->add_option("--operator", r_op, "operator file prefix");
  rec->add_option("--features", r_features, "features CSV");
  rec->add_option("--link", r_link, "complex_exp | real_sine");
  rec->add_option("--s", r_s, "sparsity");
  rec->add_option("--omega", r_omega, "tone band half-width");
  rec->add_option("--coarse-points", r_coarse, "coarse grid size");
  rec->add_option("--refine-rounds", r_rounds, "refinement rounds");
  rec->add_option("--refine-factor", r_factor, "grid shrink per round");
  rec->add_option("--out", r_out, "estimate CSV");

  // experiment / image
  auto* exp = app.add_subcommand("experiment", "Run a Monte Carlo sweep from a JSON config");
  std::string x_config;
  std::uint64_t x_seed = 0;
  std::string x_out;
  int x_threads = -1;
  exp->add_option("config", x_config, "config JSON path")->required();
  auto* x_seed_opt = exp->add_option("--seed", x_seed, "override master seed");
  exp->add_option("--out", x_out, "override output prefix");
  exp->add_option("--threads", x_threads, "worker threads (0 = all cores)");

  auto* img = app.add_subcommand("image", "Run the 2-D image experiment from a JSON config");
  std::string i_config;
  std::uint64_t i_seed = 0;
  std::string i_out;
  img->add_option("config", i_config, "config JSON path")->required();
  auto* i_seed_opt = img->add_option("--seed", i_seed, "override master seed");
  img->add_option("--out", i_out, "override output prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(g_n, g_q, g_k, g_s, g_norm, g_seed, g_inner, g_block, g_T, g_out);
    if (emb->parsed()) return cmd_embed(e_op, e_signal, e_link, e_sigma, e_seed, e_out);
    if (rec->parsed())
      return cmd_recover(r_op, r_features, r_link, r_s, r_omega, r_coarse, r_rounds, r_factor, r_out);
    if (exp->parsed())
      return cmd_experiment(x_config, x_seed, x_seed_opt->count() > 0, x_out, x_threads);
    if (img->parsed()) return cmd_image(i_config, i_seed, i_seed_opt->count() > 0, i_out);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
