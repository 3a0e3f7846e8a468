#include "mfs/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <vector>

#include "mfs/errors.hpp"
#include "mfs/recovery.hpp"

namespace mfs {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_square_pow2(const Eigen::MatrixXd& m) {
  const Index w = m.rows();
  if (w == 0 || m.cols() != w || (w & (w - 1)) != 0)
    throw BadDimensions("image must be w x w with w a power of 2, got " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()));
}

void haar_step_rows(Eigen::MatrixXd& block, Index size) {
  Eigen::VectorXd tmp(size);
  for (Index r = 0; r < size; ++r) {
    for (Index i = 0; i < size / 2; ++i) {
      tmp[i] = (block(r, 2 * i) + block(r, 2 * i + 1)) * kInvSqrt2;
      tmp[size / 2 + i] = (block(r, 2 * i) - block(r, 2 * i + 1)) * kInvSqrt2;
    }
    block.row(r).head(size) = tmp;
  }
}

void haar_unstep_rows(Eigen::MatrixXd& block, Index size) {
  Eigen::VectorXd tmp(size);
  for (Index r = 0; r < size; ++r) {
    for (Index i = 0; i < size / 2; ++i) {
      tmp[2 * i] = (block(r, i) + block(r, size / 2 + i)) * kInvSqrt2;
      tmp[2 * i + 1] = (block(r, i) - block(r, size / 2 + i)) * kInvSqrt2;
    }
    block.row(r).head(size) = tmp;
  }
}

}  // namespace

Eigen::MatrixXd haar2d_forward(const Eigen::MatrixXd& image) {
  check_square_pow2(image);
  Eigen::MatrixXd coeffs = image;
  for (Index size = image.rows(); size >= 2; size /= 2) {
    haar_step_rows(coeffs, size);
    coeffs.transposeInPlace();
    haar_step_rows(coeffs, size);
    coeffs.transposeInPlace();
  }
  return coeffs;
}

Eigen::MatrixXd haar2d_inverse(const Eigen::MatrixXd& coefficients) {
  check_square_pow2(coefficients);
  Eigen::MatrixXd image = coefficients;
  for (Index size = 2; size <= image.rows(); size *= 2) {
    image.transposeInPlace();
    haar_unstep_rows(image, size);
    image.transposeInPlace();
    haar_unstep_rows(image, size);
  }
  return image;
}

double psnr(const Eigen::MatrixXd& reference, const Eigen::MatrixXd& image, double peak) {
  if (reference.rows() != image.rows() || reference.cols() != image.cols())
    throw BadDimensions("psnr: shape mismatch");
  const double mse = (reference - image).squaredNorm() / static_cast<double>(reference.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

SparsifyResult sparsify_image(const Eigen::MatrixXd& image, Index s, double peak) {
  check_square_pow2(image);
  if (s < 0 || s > image.size()) throw InvalidSparsity("s out of range for image size");

  const Eigen::MatrixXd coeffs = haar2d_forward(image);
  const Eigen::VectorXd flat = Eigen::Map<const Eigen::VectorXd>(coeffs.data(), coeffs.size());
  const Eigen::VectorXd kept = hard_threshold(flat, s);

  SparsifyResult out;
  out.coefficients = Eigen::Map<const Eigen::MatrixXd>(kept.data(), coeffs.rows(), coeffs.cols());
  if ((kept.array() != flat.array()).count() == 0) {
    out.approximation = image;  // nothing discarded: exactly lossless by contract
  } else {
    out.approximation = haar2d_inverse(out.coefficients);
  }
  out.psnr = psnr(image, out.approximation, peak);
  return out;
}

Eigen::MatrixXd read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P5") throw IoError(path + ": not a binary PGM (P5) file");

  const auto next_int = [&]() {
    // skip whitespace and '#' comment lines
    int c;
    while ((c = in.peek()) != EOF && (std::isspace(c) || c == '#')) {
      if (c == '#') {
        std::string line;
        std::getline(in, line);
      } else {
        in.get();
      }
    }
    long v;
    if (!(in >> v)) throw IoError(path + ": malformed PGM header");
    return v;
  };

  const long width = next_int();
  const long height = next_int();
  const long maxval = next_int();
  if (maxval <= 0 || maxval > 255) throw IoError(path + ": only 8-bit PGM supported");
  in.get();  // single whitespace before raster

  std::vector<unsigned char> raster(static_cast<size_t>(width) * height);
  in.read(reinterpret_cast<char*>(raster.data()), static_cast<std::streamsize>(raster.size()));
  if (in.gcount() != static_cast<std::streamsize>(raster.size()))
    throw IoError(path + ": truncated raster");

  Eigen::MatrixXd image(height, width);
  for (long r = 0; r < height; ++r)
    for (long c = 0; c < width; ++c) image(r, c) = raster[static_cast<size_t>(r) * width + c];
  return image;
}

void write_pgm(const std::string& path, const Eigen::MatrixXd& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "P5\n" << image.cols() << " " << image.rows() << "\n255\n";
  for (Index r = 0; r < image.rows(); ++r)
    for (Index c = 0; c < image.cols(); ++c) {
      const double v = std::round(std::min(255.0, std::max(0.0, image(r, c))));
      out.put(static_cast<char>(static_cast<unsigned char>(v)));
    }
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace mfs
