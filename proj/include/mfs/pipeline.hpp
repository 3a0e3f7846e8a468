#ifndef MFS_PIPELINE_HPP
#define MFS_PIPELINE_HPP

#include <utility>

#include "mfs/linear_map.hpp"
#include "mfs/model.hpp"
#include "mfs/recovery.hpp"

namespace mfs {

struct MfSparseDiagnostics {
  double tone_ms = 0.0;
  double recovery_ms = 0.0;
  double tone_residual_mean = 0.0;  // mean of ||u - link(z_hat * t)||_2 per coordinate
  double tone_residual_max = 0.0;
  bool omega_too_small = false;  // > 1% of coordinates clipped at the band edge
  bool cosamp_converged = false;
};

struct MfSparseResult {
  SparseSignal estimate;
  Eigen::VectorXd tones;
  MfSparseDiagnostics diagnostics;
};

/// Algorithm end to end: per-coordinate tone estimation, then sparse recovery
/// of x from z_hat ~= B x.
MfSparseResult mf_sparse(const FeatureVector& y, const SensingOperator& op, const ToneGrid& grid,
                         Index s, const CosampConfig& cfg = {});

/// Same pipeline against an arbitrary inner linear map (structured image
/// operator); blocks is the k x q diagonal array.
MfSparseResult mf_sparse_with_map(const FeatureVector& y, const LinearMap& inner,
                                  const Eigen::MatrixXd& blocks, const ToneGrid& grid, Index s,
                                  const CosampConfig& cfg = {});

struct DefaultParams {
  Index q = 0;
  Index k = 0;
  double omega = 0.0;
  double uniform_half_width = 0.0;  // T
};

struct ParamConstants {
  double c1 = 4.0;  // k multiplier
  double c2 = 4.0;  // q multiplier
  double c3 = 3.0;  // omega = c3 * R
  double c4 = 1.0;  // T = c4 / eps'
};

/// Sample-complexity driven defaults:
///   q = ceil(c2 * s * log(n/s)),
///   k = ceil(c1 * (1 + sigma^2) * log(R q / (eps delta))),
///   omega = c3 * R, T = c4 / eps' with eps' = eps / sqrt(q).
DefaultParams default_params(Index n, Index s, double R, double eps, double delta, double sigma,
                             const ParamConstants& c = {});

/// (relative l2 error, cosine similarity). Throws ZeroVector when the
/// denominators vanish.
std::pair<double, double> metrics(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth);

}  // namespace mfs

#endif
