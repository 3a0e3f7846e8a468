#ifndef MFS_MODEL_HPP
#define MFS_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace mfs {

using Index = Eigen::Index;

enum class LinkType { ComplexExp, RealSine };

/// s-sparse real vector of length n with an optional Euclidean norm bound R
/// (used to size the tone search band).
struct SparseSignal {
  Eigen::VectorXd values;
  Index sparsity = 0;
  double norm_bound = 0.0;  // 0 means "not declared"

  Index n() const { return values.size(); }
  Index nnz() const;
};

/// The factorized sensing map A = D * B: a dense q x n inner matrix plus the
/// diagonals of k diagonal blocks, stored as a k x q array (row r = diagonal
/// of block r). Sample j = r*q + l of A x equals blocks(r, l) * (B x)(l).
struct SensingOperator {
  Eigen::MatrixXd inner;   // q x n
  Eigen::MatrixXd blocks;  // k x q

  Index q() const { return inner.rows(); }
  Index n() const { return inner.cols(); }
  Index k() const { return blocks.rows(); }
  Index m() const { return k() * q(); }
};

/// Length-m observation vector. Complex data is held for ComplexExp, real
/// data for RealSine; the unused buffer stays empty.
struct FeatureVector {
  LinkType link = LinkType::ComplexExp;
  Eigen::VectorXcd cdata;
  Eigen::VectorXd rdata;
  double noise_sigma = 0.0;

  Index size() const { return link == LinkType::ComplexExp ? cdata.size() : rdata.size(); }
};

/// Search band Omega = [-omega, omega] with a coarse pass and local
/// refinement zooms. Final effective resolution:
///   2*omega/(coarse_points-1) * refine_factor^(-refine_rounds).
struct ToneGrid {
  double omega = 0.0;
  int coarse_points = 4096;
  int refine_rounds = 3;
  int refine_factor = 16;

  double coarse_resolution() const { return 2.0 * omega / (coarse_points - 1); }
  double final_resolution() const;
};

/// One Monte Carlo outcome.
struct TrialRecord {
  Index n = 0, q = 0, k = 0, s = 0;
  double sigma = 0.0;
  double norm = 0.0;
  LinkType link = LinkType::RealSine;
  std::uint64_t seed = 0;
  double rel_error = 0.0;
  double cosine = 0.0;
  bool success = false;
  double elapsed_ms = 0.0;
};

/// Checks dimensional consistency of an operator/signal pair.
/// Throws DimensionMismatch naming the offending quantity.
void validate(const SensingOperator& op, const SparseSignal& signal);

const char* link_name(LinkType link);
LinkType link_from_name(const std::string& name);

}  // namespace mfs

#endif
