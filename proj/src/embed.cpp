#include "mfs/embed.hpp"

#include <cmath>

#include "mfs/errors.hpp"
#include "mfs/rng.hpp"

namespace mfs {

SensingOperator make_operator(const OperatorSpec& spec) {
  if (spec.n <= 0 || spec.q <= 0 || spec.k <= 0)
    throw InvalidSpec("dimensions must be positive (n=" + std::to_string(spec.n) +
                      ", q=" + std::to_string(spec.q) + ", k=" + std::to_string(spec.k) + ")");
  if (spec.block_dist == BlockDist::UniformSym && spec.uniform_half_width <= 0.0)
    throw InvalidSpec("uniform block half-width T must be positive");

  CounterRng rng(spec.seed);
  SensingOperator op;
  op.inner.resize(spec.q, spec.n);
  const double scale = spec.inner_dist == InnerDist::GaussianVar1OverQ
                           ? 1.0 / std::sqrt(static_cast<double>(spec.q))
                           : 1.0 / std::pow(static_cast<double>(spec.q), 0.25);
  for (Index r = 0; r < spec.q; ++r)
    for (Index c = 0; c < spec.n; ++c) op.inner(r, c) = scale * rng.next_normal();

  op.blocks.resize(spec.k, spec.q);
  for (Index r = 0; r < spec.k; ++r)
    for (Index l = 0; l < spec.q; ++l)
      op.blocks(r, l) = spec.block_dist == BlockDist::UniformSym
                            ? rng.next_uniform(-spec.uniform_half_width, spec.uniform_half_width)
                            : rng.next_normal();
  return op;
}

Eigen::VectorXd linear_project(const SensingOperator& op, const SparseSignal& x) {
  if (x.n() != op.n())
    throw DimensionMismatch("linear_project: signal length " + std::to_string(x.n()) +
                            " != n=" + std::to_string(op.n()));
  return op.inner * x.values;
}

namespace {

FeatureVector link_and_noise(const Eigen::MatrixXd& blocks, const Eigen::VectorXd& z, LinkType link,
                             double sigma, std::uint64_t noise_seed) {
  if (sigma < 0.0) throw InvalidSpec("sigma must be >= 0");
  const Index k = blocks.rows();
  const Index q = blocks.cols();
  if (z.size() != q) throw DimensionMismatch("projected vector length != q");

  CounterRng rng(noise_seed);
  FeatureVector y;
  y.link = link;
  y.noise_sigma = sigma;
  if (link == LinkType::ComplexExp) {
    y.cdata.resize(k * q);
    const double part_sigma = sigma / std::sqrt(2.0);
    for (Index r = 0; r < k; ++r)
      for (Index l = 0; l < q; ++l) {
        const double w = blocks(r, l) * z[l];
        double re = std::cos(w);
        double im = std::sin(w);
        if (sigma > 0.0) {
          re += part_sigma * rng.next_normal();
          im += part_sigma * rng.next_normal();
        }
        y.cdata[r * q + l] = {re, im};
      }
  } else {
    y.rdata.resize(k * q);
    for (Index r = 0; r < k; ++r)
      for (Index l = 0; l < q; ++l) {
        double v = std::sin(blocks(r, l) * z[l]);
        if (sigma > 0.0) v += sigma * rng.next_normal();
        y.rdata[r * q + l] = v;
      }
  }
  return y;
}

}  // namespace

FeatureVector forward(const SensingOperator& op, const SparseSignal& x, LinkType link, double sigma,
                      std::uint64_t noise_seed) {
  return link_and_noise(op.blocks, linear_project(op, x), link, sigma, noise_seed);
}

FeatureVector forward_with_map(const LinearMap& inner, const Eigen::MatrixXd& blocks,
                               const Eigen::VectorXd& x, LinkType link, double sigma,
                               std::uint64_t noise_seed) {
  if (x.size() != inner.cols()) throw DimensionMismatch("forward_with_map: vector length != n");
  return link_and_noise(blocks, inner.apply(x), link, sigma, noise_seed);
}

std::shared_ptr<SubsampledDctMap> make_structured_operator(Index n, Index q, std::uint64_t seed) {
  if (n <= 0 || q <= 0 || q > n) throw InvalidSpec("need 0 < q <= n");
  // power of 4: power of 2 with even exponent
  Index e = 0;
  Index v = n;
  while (v > 1 && (v & 1) == 0) {
    v >>= 1;
    ++e;
  }
  if (v != 1 || (e % 2) != 0) throw InvalidSpec("n must be a power of 4, got " + std::to_string(n));

  CounterRng rng(seed);
  Eigen::VectorXd signs(n);
  for (Index i = 0; i < n; ++i) signs[i] = rng.next_double() < 0.5 ? -1.0 : 1.0;

  // Fisher-Yates prefix over [0, n) gives q distinct rows.
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (Index i = 0; i < q; ++i) {
    const Index j = i + static_cast<Index>(rng.next_u64() % static_cast<std::uint64_t>(n - i));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(q);
  return std::make_shared<SubsampledDctMap>(std::move(signs), std::move(perm), n);
}

Eigen::MatrixXd uniform_blocks(Index k, Index q, double spacing) {
  Eigen::MatrixXd blocks(k, q);
  for (Index r = 0; r < k; ++r) blocks.row(r).setConstant(spacing * (r + 1));
  return blocks;
}

}  // namespace mfs
