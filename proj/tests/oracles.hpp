// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive so they share no code with the implementation paths they
// check.
#ifndef MFS_TESTS_ORACLES_HPP
#define MFS_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

// Exhaustive single-tone argmax of |<u, exp(i v t)>| over a dense grid.
inline double brute_force_complex_tone(const Eigen::VectorXd& t, const Eigen::VectorXcd& u,
                                       double omega, long points) {
  double best_v = 0.0, best = -1.0;
  for (long j = 0; j < points; ++j) {
    const double v = -omega + 2.0 * omega * j / (points - 1);
    std::complex<double> acc(0.0, 0.0);
    for (Eigen::Index r = 0; r < t.size(); ++r)
      acc += u[r] * std::exp(std::complex<double>(0.0, -v * t[r]));
    const double mag = std::abs(acc);
    if (mag > best) {
      best = mag;
      best_v = v;
    }
  }
  return best_v;
}

// Exhaustive least-squares minimizer of ||u - sin(v t)||_2 over a dense grid.
inline double brute_force_sine_tone(const Eigen::VectorXd& t, const Eigen::VectorXd& u,
                                    double omega, long points) {
  double best_v = 0.0, best = std::numeric_limits<double>::infinity();
  for (long j = 0; j < points; ++j) {
    const double v = -omega + 2.0 * omega * j / (points - 1);
    double sq = 0.0;
    for (Eigen::Index r = 0; r < t.size(); ++r) sq += std::pow(u[r] - std::sin(v * t[r]), 2);
    if (sq < best) {
      best = sq;
      best_v = v;
    }
  }
  return best_v;
}

// Triple-loop matrix-vector product.
inline Eigen::VectorXd naive_matvec(const Eigen::MatrixXd& A, const Eigen::VectorXd& x) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(A.rows());
  for (Eigen::Index r = 0; r < A.rows(); ++r)
    for (Eigen::Index c = 0; c < A.cols(); ++c) out[r] += A(r, c) * x[c];
  return out;
}

// Naive O(N^2) orthonormal DCT-II.
inline Eigen::VectorXd naive_dct2(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += x[i] * std::cos(M_PI * (i + 0.5) * k / n);
    out[k] = acc * (k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n));
  }
  return out;
}

// Best s-subset least squares by complete enumeration; returns the support.
inline std::vector<Eigen::Index> best_subset_support(const Eigen::MatrixXd& B,
                                                     const Eigen::VectorXd& z, int s) {
  const Eigen::Index n = B.cols();
  std::vector<Eigen::Index> best;
  double best_res = std::numeric_limits<double>::infinity();

  std::vector<Eigen::Index> combo(s);
  const auto eval = [&]() {
    Eigen::MatrixXd sub(B.rows(), s);
    for (int i = 0; i < s; ++i) sub.col(i) = B.col(combo[i]);
    const Eigen::VectorXd coef = sub.colPivHouseholderQr().solve(z);
    const double res = (z - sub * coef).norm();
    if (res < best_res) {
      best_res = res;
      best.assign(combo.begin(), combo.end());
    }
  };

  // iterate all C(n, s) index combinations
  for (int i = 0; i < s; ++i) combo[i] = i;
  while (true) {
    eval();
    int pos = s - 1;
    while (pos >= 0 && combo[pos] == n - s + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int i = pos + 1; i < s; ++i) combo[i] = combo[i - 1] + 1;
  }
  return best;
}

}  // namespace oracles

#endif
