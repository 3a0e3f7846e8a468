#ifndef MFS_SPECTRAL_HPP
#define MFS_SPECTRAL_HPP

#include <Eigen/Dense>

#include "mfs/model.hpp"

namespace mfs {

/// Per-coordinate gather: sample "times" t (the l-th diagonal entries across
/// blocks) and the k observed samples at those times.
struct ToneSamples {
  Eigen::VectorXd t;
  Eigen::VectorXcd u_complex;  // ComplexExp link
  Eigen::VectorXd u_real;      // RealSine link
};

/// Single complex tone estimate: argmax over the grid of |<u, exp(i t v)>|,
/// coarse pass then refine_rounds local zooms. Exact float ties break toward
/// smaller |v|, then smaller v.
double matched_filter_complex(const ToneSamples& samples, const ToneGrid& grid);

/// Single real-sine tone estimate: maximizes 2|<u, sin(t v)>| - ||sin(t v)||^2
/// over v >= 0 (the objective is even in v since sin(-vt) = -sin(vt)), then
/// recovers the sign from the inner product.
double matched_filter_sine(const ToneSamples& samples, const ToneGrid& grid);

/// Stage 1 of the pipeline: gathers (t, u) for each coordinate l by the
/// l, l+q, ..., l+(k-1)q striding and runs the link-appropriate filter.
Eigen::VectorXd estimate_tones(const FeatureVector& y, const Eigen::MatrixXd& blocks,
                               const ToneGrid& grid);

/// Deterministic baseline for uniformly spaced times: zero-padded DFT
/// magnitude peak with parabolic interpolation. Alias-limited to
/// |v| <= pi / spacing; tones beyond that band come back aliased.
double uniform_grid_estimator(const ToneSamples& samples, const ToneGrid& grid);

}  // namespace mfs

#endif
