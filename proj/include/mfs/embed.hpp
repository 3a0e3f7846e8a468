#ifndef MFS_EMBED_HPP
#define MFS_EMBED_HPP

#include <cstdint>
#include <memory>

#include "mfs/linear_map.hpp"
#include "mfs/model.hpp"

namespace mfs {

enum class InnerDist { GaussianVar1OverQ, GaussianVar1OverSqrtQ };
enum class BlockDist { UniformSym, StandardNormal };

struct OperatorSpec {
  Index n = 0, q = 0, k = 0;
  InnerDist inner_dist = InnerDist::GaussianVar1OverQ;
  BlockDist block_dist = BlockDist::UniformSym;
  double uniform_half_width = 1.0;  // T, used when block_dist == UniformSym
  std::uint64_t seed = 0;
};

/// Draws B then the block diagonals from the distributions named in `spec`.
/// Fill order is normative (B row-major first, then blocks row-major) so the
/// same (spec, seed) is bit-identical across runs.
SensingOperator make_operator(const OperatorSpec& spec);

/// z = B x.
Eigen::VectorXd linear_project(const SensingOperator& op, const SparseSignal& x);

/// y = link(D B x) + e. Complex noise splits sigma^2 evenly across real and
/// imaginary parts so the total per-sample noise variance matches the real
/// case.
FeatureVector forward(const SensingOperator& op, const SparseSignal& x, LinkType link, double sigma,
                      std::uint64_t noise_seed);

/// Same forward map with the inner matrix replaced by an arbitrary linear map
/// (used by the structured image pipeline).
FeatureVector forward_with_map(const LinearMap& inner, const Eigen::MatrixXd& blocks,
                               const Eigen::VectorXd& x, LinkType link, double sigma,
                               std::uint64_t noise_seed);

/// Inner map for the image experiment: random +-1 diagonal followed by a
/// q-row subsampled orthonormal DCT. n must be a power of 4 so the Haar stage
/// can pair with it.
std::shared_ptr<SubsampledDctMap> make_structured_operator(Index n, Index q, std::uint64_t seed);

/// Deterministic block diagonals for the uniform-grid baseline: entry of
/// block r is (r+1) * spacing for every coordinate, an arithmetic progression
/// in r.
Eigen::MatrixXd uniform_blocks(Index k, Index q, double spacing);

}  // namespace mfs

#endif
