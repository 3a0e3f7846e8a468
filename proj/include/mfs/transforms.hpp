#ifndef MFS_TRANSFORMS_HPP
#define MFS_TRANSFORMS_HPP

#include <Eigen/Dense>
#include <string>

#include "mfs/model.hpp"

namespace mfs {

/// Full-depth orthonormal 2-D Haar analysis of a w x w image, w a power of 2.
/// Parseval holds exactly: ||coeffs||_2 == ||image||_2.
Eigen::MatrixXd haar2d_forward(const Eigen::MatrixXd& image);

/// Inverse of haar2d_forward.
Eigen::MatrixXd haar2d_inverse(const Eigen::MatrixXd& coefficients);

struct SparsifyResult {
  Eigen::MatrixXd coefficients;  // s largest Haar coefficients, rest zero
  Eigen::MatrixXd approximation; // synthesized s-term image
  double psnr = 0.0;             // of the s-term approximation vs the input; inf when lossless
};

/// Keeps the s largest-magnitude Haar coefficients. The returned PSNR is the
/// quality ceiling for any recovery that targets these coefficients.
SparsifyResult sparsify_image(const Eigen::MatrixXd& image, Index s, double peak = 255.0);

double psnr(const Eigen::MatrixXd& reference, const Eigen::MatrixXd& image, double peak = 255.0);

// Binary 8-bit grayscale PGM (P5). Values are clamped to [0, 255] on write.
Eigen::MatrixXd read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Eigen::MatrixXd& image);

}  // namespace mfs

#endif
