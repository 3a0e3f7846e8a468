#include "mfs/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mfs/errors.hpp"

namespace mfs {

std::vector<Index> top_support(const Eigen::VectorXd& v, Index s) {
  if (s < 0 || s > v.size()) throw InvalidSparsity("s=" + std::to_string(s) + " out of range for length " + std::to_string(v.size()));
  std::vector<Index> idx(v.size());
  std::iota(idx.begin(), idx.end(), Index{0});
  std::partial_sort(idx.begin(), idx.begin() + s, idx.end(), [&](Index a, Index b) {
    const double ma = std::abs(v[a]);
    const double mb = std::abs(v[b]);
    return ma > mb || (ma == mb && a < b);
  });
  idx.resize(s);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Eigen::VectorXd hard_threshold(const Eigen::VectorXd& v, Index s) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (Index i : top_support(v, s)) out[i] = v[i];
  return out;
}

namespace {

// Conjugate gradient on the normal equations restricted to a support set.
// Throws SolverBreakdown when the Rayleigh quotients seen along the way
// indicate a condition number above 1e12.
Eigen::VectorXd restricted_least_squares(const Eigen::VectorXd& z, const LinearMap& B,
                                         const std::vector<Index>& support, int max_iters,
                                         double tol) {
  const Index n = B.cols();
  const Index ts = static_cast<Index>(support.size());

  const auto embed = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    for (Index i = 0; i < ts; ++i) full[support[i]] = v[i];
    return full;
  };
  const auto restrict_to = [&](const Eigen::VectorXd& full) {
    Eigen::VectorXd v(ts);
    for (Index i = 0; i < ts; ++i) v[i] = full[support[i]];
    return v;
  };
  const auto normal_apply = [&](const Eigen::VectorXd& v) {
    return restrict_to(B.apply_adjoint(B.apply(embed(v))));
  };

  const Eigen::VectorXd rhs = restrict_to(B.apply_adjoint(z));
  const double rhs_norm = rhs.norm();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(ts);
  if (rhs_norm == 0.0) return b;

  Eigen::VectorXd r = rhs;
  Eigen::VectorXd p = r;
  double rs = r.squaredNorm();
  double ray_min = std::numeric_limits<double>::infinity();
  double ray_max = 0.0;

  for (int it = 0; it < max_iters && std::sqrt(rs) > tol * rhs_norm; ++it) {
    const Eigen::VectorXd Ap = normal_apply(p);
    const double pAp = p.dot(Ap);
    const double pp = p.squaredNorm();
    if (pp == 0.0) break;
    const double ray = pAp / pp;
    ray_min = std::min(ray_min, ray);
    ray_max = std::max(ray_max, ray);
    if (ray <= 0.0 || (ray_min > 0.0 && ray_max / ray_min > 1e12))
      throw SolverBreakdown("restricted normal equations numerically singular at support size " +
                            std::to_string(ts));
    const double alpha = rs / pAp;
    b += alpha * p;
    r -= alpha * Ap;
    const double rs_new = r.squaredNorm();
    p = r + (rs_new / rs) * p;
    rs = rs_new;
  }
  return b;
}

}  // namespace

CosampResult cosamp(const Eigen::VectorXd& z, const LinearMap& B, Index s, const CosampConfig& cfg) {
  const Index q = B.rows();
  const Index n = B.cols();
  if (z.size() != q) throw DimensionMismatch("cosamp: measurement length != map rows");
  if (s <= 0 || s > n) throw InvalidSparsity("cosamp: s must be in [1, n]");

  CosampResult res;
  res.estimate.values = Eigen::VectorXd::Zero(n);
  res.estimate.sparsity = s;

  const double z_norm = z.norm();
  if (z_norm == 0.0) {
    res.converged = true;
    return res;
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd residual = z;
  Eigen::VectorXd best_x = x;
  double best_res = z_norm;
  res.residual_history.push_back(best_res);
  int since_improve = 0;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    res.iterations = iter + 1;

    const Eigen::VectorXd proxy = B.apply_adjoint(residual);
    const std::vector<Index> omega = top_support(proxy, std::min<Index>(2 * s, n));

    // merge with the current support
    std::vector<Index> merged = omega;
    for (Index i = 0; i < n; ++i)
      if (x[i] != 0.0) merged.push_back(i);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    const Eigen::VectorXd b = restricted_least_squares(z, B, merged, cfg.ls_iters, cfg.ls_tol);
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    for (size_t i = 0; i < merged.size(); ++i) full[merged[i]] = b[static_cast<Index>(i)];
    x = hard_threshold(full, s);

    residual = z - B.apply(x);
    const double res_norm = residual.norm();
    if (res_norm < best_res - 1e-12 * z_norm) {
      best_res = res_norm;
      best_x = x;
      res.residual_history.push_back(best_res);
      since_improve = 0;
    } else {
      ++since_improve;
    }
    if (best_res / z_norm < cfg.residual_tol) {
      res.converged = true;
      break;
    }
    // on noisy or corrupted input the residual floor is far above
    // residual_tol; stop once the support has stopped improving
    if (since_improve >= cfg.patience) break;
  }

  res.estimate.values = best_x;
  return res;
}

}  // namespace mfs
