#include "mfs/linear_map.hpp"

#include <cmath>

#include "mfs/errors.hpp"

namespace mfs {

namespace {

bool is_pow2(Index n) { return n > 0 && (n & (n - 1)) == 0; }

// Lee's recursive split for the unscaled DCT-II:
//   X_k = sum_n x_n cos(pi*(n+1/2)*k/N)
void dct2_rec(double* vec, double* temp, Index len) {
  if (len == 1) return;
  const Index half = len / 2;
  for (Index i = 0; i < half; ++i) {
    const double a = vec[i];
    const double b = vec[len - 1 - i];
    temp[i] = a + b;
    temp[i + half] = (a - b) / (std::cos((i + 0.5) * M_PI / len) * 2.0);
  }
  dct2_rec(temp, vec, half);
  dct2_rec(temp + half, vec, half);
  for (Index i = 0; i < half - 1; ++i) {
    vec[i * 2] = temp[i];
    vec[i * 2 + 1] = temp[i + half] + temp[i + half + 1];
  }
  vec[len - 2] = temp[half - 1];
  vec[len - 1] = temp[len - 1];
}

// Inverse of the above up to scale (unscaled DCT-III, DC term not halved):
//   x_n = X_0 + sum_{k>=1} X_k cos(pi*(n+1/2)*k/N)
void dct3_rec(double* vec, double* temp, Index len) {
  if (len == 1) return;
  const Index half = len / 2;
  temp[0] = vec[0];
  temp[half] = vec[1];
  for (Index i = 1; i < half; ++i) {
    temp[i] = vec[i * 2];
    temp[i + half] = vec[i * 2 - 1] + vec[i * 2 + 1];
  }
  dct3_rec(temp, vec, half);
  dct3_rec(temp + half, vec, half);
  for (Index i = 0; i < half; ++i) {
    const double x = temp[i];
    const double y = temp[i + half] / (std::cos((i + 0.5) * M_PI / len) * 2.0);
    vec[i] = x + y;
    vec[len - 1 - i] = x - y;
  }
}

}  // namespace

Eigen::VectorXd dct2_orthonormal(const Eigen::VectorXd& x) {
  const Index n = x.size();
  if (!is_pow2(n)) throw BadDimensions("DCT length must be a power of 2, got " + std::to_string(n));
  Eigen::VectorXd out = x;
  Eigen::VectorXd scratch(n);
  dct2_rec(out.data(), scratch.data(), n);
  const double s0 = std::sqrt(1.0 / n);
  const double sk = std::sqrt(2.0 / n);
  out[0] *= s0;
  out.tail(n - 1) *= sk;
  return out;
}

Eigen::VectorXd dct3_orthonormal(const Eigen::VectorXd& coeffs) {
  const Index n = coeffs.size();
  if (!is_pow2(n)) throw BadDimensions("DCT length must be a power of 2, got " + std::to_string(n));
  const double s0 = std::sqrt(1.0 / n);
  const double sk = std::sqrt(2.0 / n);
  Eigen::VectorXd out = coeffs;
  out[0] *= s0;
  out.tail(n - 1) *= sk;
  Eigen::VectorXd scratch(n);
  dct3_rec(out.data(), scratch.data(), n);
  return out;
}

SubsampledDctMap::SubsampledDctMap(Eigen::VectorXd signs, std::vector<Index> row_indices, Index n)
    : signs_(std::move(signs)), rows_(std::move(row_indices)), n_(n) {
  if (!is_pow2(n_)) throw InvalidSpec("subsampled DCT needs power-of-2 length, got " + std::to_string(n_));
  if (signs_.size() != n_) throw DimensionMismatch("sign vector length != n");
  for (Index r : rows_)
    if (r < 0 || r >= n_) throw DimensionMismatch("row index out of range");
}

Eigen::VectorXd SubsampledDctMap::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw DimensionMismatch("apply: vector length != n");
  const Eigen::VectorXd full = dct2_orthonormal(signs_.cwiseProduct(x));
  Eigen::VectorXd out(rows());
  for (Index i = 0; i < rows(); ++i) out[i] = full[rows_[i]];
  return out;
}

Eigen::VectorXd SubsampledDctMap::apply_adjoint(const Eigen::VectorXd& u) const {
  if (u.size() != rows()) throw DimensionMismatch("apply_adjoint: vector length != q");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n_);
  for (Index i = 0; i < rows(); ++i) full[rows_[i]] = u[i];
  return signs_.cwiseProduct(dct3_orthonormal(full));
}

}  // namespace mfs
