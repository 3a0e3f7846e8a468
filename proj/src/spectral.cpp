#include "mfs/spectral.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <functional>
#include <vector>

#include "mfs/errors.hpp"

namespace mfs {

namespace {

struct Best {
  double v = 0.0;
  double obj = -std::numeric_limits<double>::infinity();

  void consider(double cand_v, double cand_obj) {
    if (cand_obj > obj) {
      v = cand_v;
      obj = cand_obj;
    } else if (cand_obj == obj) {
      // deterministic tie rule: smaller |v| wins, then smaller v
      if (std::abs(cand_v) < std::abs(v) || (std::abs(cand_v) == std::abs(v) && cand_v < v)) v = cand_v;
    }
  }
};

void check_grid(const ToneGrid& grid, double t_max) {
  if (grid.omega <= 0.0 || grid.coarse_points < 3) throw EmptyGrid("need omega > 0 and coarse_points >= 3");
  // A coarse step larger than half the shortest oscillation period of the
  // objective can miss the main lobe entirely.
  if (t_max > 0.0 && grid.coarse_resolution() * t_max > M_PI)
    throw GridTooCoarse("coarse resolution " + std::to_string(grid.coarse_resolution()) +
                        " too large for max |t| = " + std::to_string(t_max));
}

// Coarse pass over [lo, hi] with the given spacing, then local zooms.
double search(const std::function<double(double)>& objective, double lo, double hi, Index points,
              const ToneGrid& grid) {
  const double spacing = (hi - lo) / static_cast<double>(points - 1);
  Best best;
  // the exact band center first, so a tone at 0 is returned as 0 and not as
  // the nearest representable grid value
  const double center0 = (lo + hi) / 2.0;
  best.consider(center0, objective(center0));
  for (Index j = 0; j < points; ++j) best.consider(lo + j * spacing, objective(lo + j * spacing));

  double step = spacing;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    step /= grid.refine_factor;
    const double center = best.v;
    for (int j = -grid.refine_factor; j <= grid.refine_factor; ++j) {
      const double v = center + j * step;
      if (v < lo || v > hi || j == 0) continue;  // center already scored
      best.consider(v, objective(v));
    }
  }
  return best.v;
}

}  // namespace

double matched_filter_complex(const ToneSamples& samples, const ToneGrid& grid) {
  const Index k = samples.t.size();
  if (k < 1 || samples.u_complex.size() != k)
    throw DimensionMismatch("complex matched filter: t and u must have equal length >= 1");
  check_grid(grid, samples.t.cwiseAbs().maxCoeff());

  const auto objective = [&](double v) {
    std::complex<double> acc(0.0, 0.0);
    for (Index r = 0; r < k; ++r) {
      const double phase = -v * samples.t[r];
      acc += samples.u_complex[r] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return std::norm(acc);
  };
  return search(objective, -grid.omega, grid.omega, grid.coarse_points, grid);
}

double matched_filter_sine(const ToneSamples& samples, const ToneGrid& grid) {
  const Index k = samples.t.size();
  if (k < 1 || samples.u_real.size() != k)
    throw DimensionMismatch("sine matched filter: t and u must have equal length >= 1");
  check_grid(grid, samples.t.cwiseAbs().maxCoeff());

  const auto objective = [&](double v) {
    double ip = 0.0, energy = 0.0;
    for (Index r = 0; r < k; ++r) {
      const double s = std::sin(samples.t[r] * v);
      ip += samples.u_real[r] * s;
      energy += s * s;
    }
    return 2.0 * std::abs(ip) - energy;
  };

  // Objective is even in v: search v >= 0 at the coarse spacing of the full
  // grid, then set the sign from the inner product.
  const Index half_points = (grid.coarse_points - 1) / 2 + 1;
  const double v_star = search(objective, 0.0, grid.omega, half_points, grid);

  double ip = 0.0;
  for (Index r = 0; r < k; ++r) ip += samples.u_real[r] * std::sin(samples.t[r] * v_star);
  return ip < 0.0 ? -v_star : v_star;
}

Eigen::VectorXd estimate_tones(const FeatureVector& y, const Eigen::MatrixXd& blocks,
                               const ToneGrid& grid) {
  const Index k = blocks.rows();
  const Index q = blocks.cols();
  if (y.size() != k * q)
    throw DimensionMismatch("feature vector length " + std::to_string(y.size()) +
                            " != m = k*q = " + std::to_string(k * q));

  Eigen::VectorXd z_hat(q);
  ToneSamples samples;
  samples.t.resize(k);
  if (y.link == LinkType::ComplexExp)
    samples.u_complex.resize(k);
  else
    samples.u_real.resize(k);

  for (Index l = 0; l < q; ++l) {
    samples.t = blocks.col(l);
    if (y.link == LinkType::ComplexExp) {
      for (Index r = 0; r < k; ++r) samples.u_complex[r] = y.cdata[r * q + l];
      z_hat[l] = matched_filter_complex(samples, grid);
    } else {
      for (Index r = 0; r < k; ++r) samples.u_real[r] = y.rdata[r * q + l];
      z_hat[l] = matched_filter_sine(samples, grid);
    }
  }
  return z_hat;
}

double uniform_grid_estimator(const ToneSamples& samples, const ToneGrid& grid) {
  const Index k = samples.t.size();
  if (k < 2) throw DimensionMismatch("uniform-grid estimator needs k >= 2 samples");
  if (grid.omega <= 0.0) throw EmptyGrid("need omega > 0");

  const double dt = samples.t[1] - samples.t[0];
  if (dt == 0.0) throw NonUniformSamples("zero sample spacing");
  for (Index r = 1; r + 1 < k; ++r) {
    const double step = samples.t[r + 1] - samples.t[r];
    if (std::abs(step - dt) > 1e-9 * std::abs(dt))
      throw NonUniformSamples("times are not an arithmetic progression");
  }

  Eigen::VectorXcd u(k);
  if (samples.u_complex.size() == k)
    u = samples.u_complex;
  else if (samples.u_real.size() == k)
    for (Index r = 0; r < k; ++r) u[r] = samples.u_real[r];
  else
    throw DimensionMismatch("samples do not match time vector length");

  // Zero-padded DFT magnitude over the digital band theta in [-pi, pi).
  const Index pad = 4096;
  Eigen::VectorXd mag(pad);
  Index peak = 0;
  for (Index b = 0; b < pad; ++b) {
    const double theta = -M_PI + 2.0 * M_PI * b / pad;
    std::complex<double> acc(0.0, 0.0);
    for (Index r = 0; r < k; ++r) acc += u[r] * std::complex<double>(std::cos(theta * r), -std::sin(theta * r));
    mag[b] = std::abs(acc);
    if (mag[b] > mag[peak]) peak = b;
  }

  const double alpha = mag[(peak - 1 + pad) % pad];
  const double beta = mag[peak];
  const double gamma = mag[(peak + 1) % pad];
  const double denom = alpha - 2.0 * beta + gamma;
  const double offset = denom == 0.0 ? 0.0 : 0.5 * (alpha - gamma) / denom;
  const double theta_star = -M_PI + 2.0 * M_PI * (peak + offset) / pad;

  // Aliases outside |v| <= pi/|dt| are reported as-is.
  return theta_star / dt;
}

}  // namespace mfs
