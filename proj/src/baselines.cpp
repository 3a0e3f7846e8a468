#include "mfs/baselines.hpp"

#include <cmath>

#include "mfs/errors.hpp"
#include "mfs/recovery.hpp"

namespace mfs {

namespace {

// w = D B x laid out block-major: w[r*q + l] = blocks(r,l) * z[l]
Eigen::VectorXd apply_db(const SensingOperator& op, const Eigen::VectorXd& x) {
  const Eigen::VectorXd z = op.inner * x;
  Eigen::VectorXd w(op.m());
  for (Index r = 0; r < op.k(); ++r)
    w.segment(r * op.q(), op.q()) = op.blocks.row(r).transpose().cwiseProduct(z);
  return w;
}

Eigen::VectorXd apply_db_adjoint(const SensingOperator& op, const Eigen::VectorXd& v) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(op.q());
  for (Index r = 0; r < op.k(); ++r)
    g += op.blocks.row(r).transpose().cwiseProduct(v.segment(r * op.q(), op.q()));
  return op.inner.transpose() * g;
}

}  // namespace

double operator_norm_squared(const SensingOperator& op, int iters) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(op.n(), 1.0 / std::sqrt(static_cast<double>(op.n())));
  double lambda = 0.0;
  for (int i = 0; i < iters; ++i) {
    Eigen::VectorXd w = apply_db_adjoint(op, apply_db(op, v));
    lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
  }
  return lambda;  // top eigenvalue of (DB)^T DB
}

GhtResult ght(const FeatureVector& y, const SensingOperator& op, Index s, const GhtConfig& cfg) {
  if (y.link != LinkType::RealSine)
    throw InvalidSpec("ght is defined for real-sine features only");
  if (y.size() != op.m()) throw DimensionMismatch("ght: feature length != m");
  if (s <= 0 || s > op.n()) throw InvalidSparsity("ght: s out of range");

  // The auto step targets the curvature seen by s-sparse iterates, which is
  // far below the full spectral norm; 1/||DB||^2 alone stalls well short of
  // convergence at these problem sizes.
  const double mu = cfg.step >= 0.0
                        ? cfg.step
                        : kAutoStepMultiplier / std::max(operator_norm_squared(op, cfg.power_iters), 1e-12);

  const auto loss_of = [&](const Eigen::VectorXd& x, Eigen::VectorXd& w) {
    w = apply_db(op, x);
    return 0.5 * (y.rdata - w.array().sin().matrix()).squaredNorm();
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(op.n());
  Eigen::VectorXd w;
  double loss = loss_of(x, w);

  GhtResult res;
  res.estimate.values = x;
  res.estimate.sparsity = s;
  res.loss = loss;

  int since_improvement = 0;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    res.iterations = iter + 1;
    const Eigen::VectorXd diff = y.rdata - w.array().sin().matrix();
    const Eigen::VectorXd grad = -apply_db_adjoint(op, w.array().cos().matrix().cwiseProduct(diff));
    x = hard_threshold(x - mu * grad, s);
    const double prev = loss;
    loss = loss_of(x, w);
    if (loss < res.loss - cfg.stall_tol * std::max(res.loss, 1.0)) {
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (loss < res.loss) {
      res.loss = loss;
      res.estimate.values = x;
    }
    if (std::abs(prev - loss) <= cfg.stall_tol * std::max(prev, 1.0)) break;
    // a chaotic plateau never trips the stall test; stop once the best loss
    // has not moved for a while
    if (since_improvement >= cfg.patience) break;
  }
  res.diverged = !std::isfinite(loss) || res.loss > 0.5 * y.rdata.squaredNorm() + 1e-9;
  return res;
}

SparseSignal one_step_threshold(const FeatureVector& y, const SensingOperator& op, Index s) {
  if (y.size() != op.m()) throw DimensionMismatch("one_step_threshold: feature length != m");
  if (s <= 0 || s > op.n()) throw InvalidSparsity("one_step_threshold: s out of range");

  Eigen::VectorXd y_tilde(op.m());
  if (y.link == LinkType::ComplexExp)
    for (Index j = 0; j < op.m(); ++j) y_tilde[j] = y.cdata[j].real();
  else
    y_tilde = y.rdata;

  Eigen::VectorXd proxy = hard_threshold(apply_db_adjoint(op, y_tilde), s);
  const double norm = proxy.norm();
  if (norm == 0.0) throw ZeroEstimate("A^T y is identically zero; direction undefined");

  SparseSignal out;
  out.values = proxy / norm;
  out.sparsity = s;
  return out;
}

}  // namespace mfs
