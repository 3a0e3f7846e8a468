#ifndef MFS_HARNESS_HPP
#define MFS_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfs/embed.hpp"
#include "mfs/model.hpp"
#include "mfs/pipeline.hpp"

namespace mfs {

enum class ExperimentKind { RecoverySweep, CosineSweep, NoiseSweep, Image };
enum class Algorithm { MfSparse, Ght, OneStep, RmStyle };

const char* experiment_name(ExperimentKind kind);
const char* algorithm_name(Algorithm alg);
ExperimentKind experiment_from_name(const std::string& name);
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::RecoverySweep;
  Index n = 4096;
  Index q = 400;
  Index s = 30;
  std::vector<Index> k_list{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> sigma_list{0.0};
  std::vector<double> norm_list{1.0};
  LinkType link = LinkType::RealSine;
  std::vector<Algorithm> algorithms{Algorithm::MfSparse};
  int trials = 50;
  std::uint64_t master_seed = 0;
  double success_threshold = 0.05;
  InnerDist inner_dist = InnerDist::GaussianVar1OverQ;
  BlockDist block_dist = BlockDist::StandardNormal;
  double uniform_half_width = 20.0;  // T when block_dist is UniformSym
  double omega_factor = 3.0;         // omega = omega_factor * ||x||_2
  int coarse_points = 4096;
  int refine_rounds = 3;
  int refine_factor = 16;
  int threads = 1;
  std::string out_prefix;

  // image experiment only
  std::string image_path;  // empty -> builtin synthetic test image
  Index image_width = 64;

  void validate() const;  // throws ConfigError with the offending field
};

struct TrialRow {
  Algorithm algorithm = Algorithm::MfSparse;
  Index cell = 0;
  int trial = 0;
  TrialRecord record;
  std::string status = "ok";  // or the error type name
};

struct CellSummary {
  Algorithm algorithm;
  Index k;
  double sigma;
  double norm;
  int trials;
  double success_rate;
  double mean_cosine;
  double mean_rel_error;
};

struct ResultTable {
  ExperimentConfig config;
  std::vector<TrialRow> rows;
  std::vector<CellSummary> summary;
};

/// Synthesis used by all sweeps: random support of size s, standard normal
/// values, rescaled so the norm matches target exactly.
SparseSignal synthesize_signal(Index n, Index s, double target_norm, std::uint64_t seed);

/// Runs every (k, sigma, norm) cell for `trials` trials. Child seeds are a
/// pure function of (master seed, cell index, trial index), so reruns
/// reproduce every number; per-trial algorithm failures are recorded in the
/// row and never abort the sweep.
ResultTable run_experiment(const ExperimentConfig& cfg);

struct ImageKResult {
  Index k = 0;
  double psnr = 0.0;        // reconstruction vs the s-term target
  double psnr_input = 0.0;  // reconstruction vs the raw input image
  Eigen::MatrixXd reconstruction;
};

struct ImageExperimentResult {
  double ceiling_psnr = 0.0;  // s-term approximation vs the input image
  Eigen::MatrixXd target;     // the s-term approximation the recovery aims at
  std::vector<ImageKResult> per_k;
};

ImageExperimentResult run_image_experiment(const ExperimentConfig& cfg);

/// Generator for the builtin 64x64-style test scene (smooth background plus
/// a few geometric shapes, wavelet-compressible).
Eigen::MatrixXd synthetic_test_image(Index w);

// --- serialization -------------------------------------------------------

ExperimentConfig config_from_json_file(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

// Fixed column order; doubles printed with round-trip precision so identical
// runs produce identical bytes. elapsed_ms is the last column and is the only
// non-reproducible field.
void write_results_csv(const std::string& path, const ResultTable& table);
void write_summary_csv(const std::string& path, const ResultTable& table);
void write_config_sidecar(const std::string& path, const ExperimentConfig& cfg);

Eigen::VectorXd read_vector_csv(const std::string& path);
void write_vector_csv(const std::string& path, const Eigen::VectorXd& v);
Eigen::VectorXcd read_cvector_csv(const std::string& path);
void write_cvector_csv(const std::string& path, const Eigen::VectorXcd& v);
Eigen::MatrixXd read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);

std::string format_double(double v);

}  // namespace mfs

#endif
