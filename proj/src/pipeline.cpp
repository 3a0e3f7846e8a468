#include "mfs/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "mfs/errors.hpp"
#include "mfs/spectral.hpp"

namespace mfs {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void tone_residuals(const FeatureVector& y, const Eigen::MatrixXd& blocks,
                    const Eigen::VectorXd& z_hat, MfSparseDiagnostics& diag) {
  const Index k = blocks.rows();
  const Index q = blocks.cols();
  double sum = 0.0, max = 0.0;
  for (Index l = 0; l < q; ++l) {
    double sq = 0.0;
    for (Index r = 0; r < k; ++r) {
      const double w = blocks(r, l) * z_hat[l];
      if (y.link == LinkType::ComplexExp)
        sq += std::norm(y.cdata[r * q + l] - std::complex<double>(std::cos(w), std::sin(w)));
      else
        sq += std::pow(y.rdata[r * q + l] - std::sin(w), 2);
    }
    const double norm = std::sqrt(sq);
    sum += norm;
    max = std::max(max, norm);
  }
  diag.tone_residual_mean = sum / q;
  diag.tone_residual_max = max;
}

MfSparseResult run(const FeatureVector& y, const LinearMap& inner, const Eigen::MatrixXd& blocks,
                   const ToneGrid& grid, Index s, const CosampConfig& cfg) {
  MfSparseResult result;

  const double t0 = now_ms();
  result.tones = estimate_tones(y, blocks, grid);
  result.diagnostics.tone_ms = now_ms() - t0;
  tone_residuals(y, blocks, result.tones, result.diagnostics);

  // Band-edge clipping means Omega was probably too small for ||Bx||_inf.
  const double edge = grid.omega - grid.final_resolution();
  Index clipped = 0;
  for (Index l = 0; l < result.tones.size(); ++l)
    if (std::abs(result.tones[l]) >= edge) ++clipped;
  result.diagnostics.omega_too_small = clipped * 100 > result.tones.size();

  const double t1 = now_ms();
  CosampResult rec = cosamp(result.tones, inner, s, cfg);
  result.diagnostics.recovery_ms = now_ms() - t1;
  result.diagnostics.cosamp_converged = rec.converged;
  result.estimate = std::move(rec.estimate);
  return result;
}

}  // namespace

MfSparseResult mf_sparse(const FeatureVector& y, const SensingOperator& op, const ToneGrid& grid,
                         Index s, const CosampConfig& cfg) {
  DenseRefMap inner(op.inner);
  return run(y, inner, op.blocks, grid, s, cfg);
}

MfSparseResult mf_sparse_with_map(const FeatureVector& y, const LinearMap& inner,
                                  const Eigen::MatrixXd& blocks, const ToneGrid& grid, Index s,
                                  const CosampConfig& cfg) {
  if (inner.rows() != blocks.cols()) throw DimensionMismatch("inner map rows != block width q");
  return run(y, inner, blocks, grid, s, cfg);
}

DefaultParams default_params(Index n, Index s, double R, double eps, double delta, double sigma,
                             const ParamConstants& c) {
  if (n <= 0 || s <= 0 || R <= 0.0 || eps <= 0.0 || delta <= 0.0)
    throw InvalidSpec("default_params: all arguments must be positive");
  DefaultParams p;
  p.q = static_cast<Index>(std::ceil(c.c2 * s * std::log(static_cast<double>(n) / s)));
  p.q = std::max<Index>(p.q, 1);
  p.k = static_cast<Index>(
      std::ceil(c.c1 * (1.0 + sigma * sigma) * std::log(R * p.q / (eps * delta))));
  p.k = std::max<Index>(p.k, 1);
  p.omega = c.c3 * R;
  const double eps_prime = eps / std::sqrt(static_cast<double>(p.q));
  p.uniform_half_width = c.c4 / eps_prime;
  return p;
}

std::pair<double, double> metrics(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
  if (estimate.size() != truth.size()) throw DimensionMismatch("metrics: length mismatch");
  const double tn = truth.norm();
  if (tn == 0.0) throw ZeroVector("metrics: ground truth is zero");
  const double rel_error = (estimate - truth).norm() / tn;
  const double en = estimate.norm();
  if (en == 0.0) throw ZeroVector("metrics: estimate is zero, cosine undefined");
  return {rel_error, estimate.dot(truth) / (en * tn)};
}

}  // namespace mfs
