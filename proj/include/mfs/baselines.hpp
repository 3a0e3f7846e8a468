#ifndef MFS_BASELINES_HPP
#define MFS_BASELINES_HPP

#include "mfs/model.hpp"

namespace mfs {

/// Auto step size is this multiple of 1/||DB||_2^2 (the norm from power
/// iteration). The multiplier compensates for the gap between the full
/// spectral norm and the much smaller curvature on s-sparse supports.
inline constexpr double kAutoStepMultiplier = 6.0;

struct GhtConfig {
  int max_iters = 300;
  double step = -1.0;         // negative -> kAutoStepMultiplier / ||DB||_2^2
  int power_iters = 20;
  double stall_tol = 1e-10;   // relative loss improvement below this stops early
  int patience = 30;          // stop after this many iterations without a new best loss
};

struct GhtResult {
  SparseSignal estimate;
  double loss = 0.0;  // squared loss of the returned (best) iterate
  int iterations = 0;
  bool diverged = false;
};

/// Projected gradient descent on 1/2 ||y - sin(DBx)||^2 with a hard-threshold
/// projection onto s-sparse vectors after each step. Real-sine features only;
/// returns the best iterate by loss.
GhtResult ght(const FeatureVector& y, const SensingOperator& op, Index s, const GhtConfig& cfg = {});

/// Single-pass estimator: hard_threshold(A^T y_tilde, s) normalized to unit
/// norm, with y_tilde the real part for complex features. Recovers direction
/// only; evaluate by cosine similarity.
SparseSignal one_step_threshold(const FeatureVector& y, const SensingOperator& op, Index s);

/// Largest squared singular value of DB estimated by power iteration
/// (deterministic start vector).
double operator_norm_squared(const SensingOperator& op, int iters);

}  // namespace mfs

#endif
