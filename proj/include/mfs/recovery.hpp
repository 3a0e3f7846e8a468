#ifndef MFS_RECOVERY_HPP
#define MFS_RECOVERY_HPP

#include <vector>

#include "mfs/linear_map.hpp"
#include "mfs/model.hpp"

namespace mfs {

struct CosampConfig {
  int max_iters = 50;
  double residual_tol = 1e-6;  // relative residual stop
  int ls_iters = 100;          // inner least-squares cap
  double ls_tol = 1e-10;
  int patience = 10;  // stop after this many iterations without a better residual
};

struct CosampResult {
  SparseSignal estimate;
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;  // best-so-far norms, non-increasing
};

/// Keeps the s largest-magnitude entries, zeroes the rest. Exact-magnitude
/// ties break toward the lower index.
Eigen::VectorXd hard_threshold(const Eigen::VectorXd& v, Index s);

/// Indices of the s largest-magnitude entries, ascending; same tie rule.
std::vector<Index> top_support(const Eigen::VectorXd& v, Index s);

/// Standard CoSaMP against an abstract linear map: proxy from the adjoint,
/// support merge with the 2s largest proxy entries, restricted least squares
/// by conjugate gradient on the normal equations, prune to s. Returns the
/// best iterate even when the residual tolerance was not reached
/// (converged=false); throws SolverBreakdown when the restricted system is
/// numerically singular.
CosampResult cosamp(const Eigen::VectorXd& z, const LinearMap& B, Index s,
                    const CosampConfig& cfg = {});

}  // namespace mfs

#endif
