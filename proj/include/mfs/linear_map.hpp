#ifndef MFS_LINEAR_MAP_HPP
#define MFS_LINEAR_MAP_HPP

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "mfs/model.hpp"

namespace mfs {

/// Matrix-free q x n linear map. The sparse-recovery stage consumes maps
/// through this interface so dense Gaussian and structured transforms share
/// one implementation.
class LinearMap {
 public:
  virtual ~LinearMap() = default;
  virtual Index rows() const = 0;
  virtual Index cols() const = 0;
  virtual Eigen::VectorXd apply(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const = 0;
};

/// Dense matrix view.
class DenseMap final : public LinearMap {
 public:
  explicit DenseMap(Eigen::MatrixXd mat) : mat_(std::move(mat)) {}
  Index rows() const override { return mat_.rows(); }
  Index cols() const override { return mat_.cols(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override { return mat_ * x; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const override {
    return mat_.transpose() * u;
  }
  const Eigen::MatrixXd& matrix() const { return mat_; }

 private:
  Eigen::MatrixXd mat_;
};

/// Non-owning dense view for callers that already hold the matrix.
class DenseRefMap final : public LinearMap {
 public:
  explicit DenseRefMap(const Eigen::MatrixXd& mat) : mat_(mat) {}
  Index rows() const override { return mat_.rows(); }
  Index cols() const override { return mat_.cols(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override { return mat_ * x; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const override {
    return mat_.transpose() * u;
  }

 private:
  const Eigen::MatrixXd& mat_;
};

/// Random +-1 sign flip followed by an orthonormal DCT-II and a q-row
/// subsample. Applies in O(n log n); rows are distinct so the row-subsampled
/// transform keeps the restricted-isometry behavior needed for sparse
/// recovery.
class SubsampledDctMap final : public LinearMap {
 public:
  SubsampledDctMap(Eigen::VectorXd signs, std::vector<Index> row_indices, Index n);
  Index rows() const override { return static_cast<Index>(rows_.size()); }
  Index cols() const override { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const override;
  const std::vector<Index>& row_indices() const { return rows_; }
  const Eigen::VectorXd& signs() const { return signs_; }

 private:
  Eigen::VectorXd signs_;       // length n, entries +-1
  std::vector<Index> rows_;     // q distinct indices in [0, n)
  Index n_;
};

// Orthonormal DCT-II and its inverse (DCT-III), length must be a power of 2.
Eigen::VectorXd dct2_orthonormal(const Eigen::VectorXd& x);
Eigen::VectorXd dct3_orthonormal(const Eigen::VectorXd& x);

}  // namespace mfs

#endif
