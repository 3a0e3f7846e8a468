#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "mfs/errors.hpp"
#include "mfs/rng.hpp"
#include "mfs/transforms.hpp"

using namespace mfs;

namespace {

Eigen::MatrixXd random_image(Eigen::Index w, std::uint64_t seed) {
  CounterRng rng(seed);
  Eigen::MatrixXd img(w, w);
  for (Eigen::Index r = 0; r < w; ++r)
    for (Eigen::Index c = 0; c < w; ++c) img(r, c) = 128.0 + 40.0 * rng.next_normal();
  return img;
}

}  // namespace

TEST_CASE("constant image concentrates on one coefficient") {
  const double c = 3.25;
  const Eigen::Index w = 16;
  const Eigen::MatrixXd coeffs = haar2d_forward(Eigen::MatrixXd::Constant(w, w, c));
  CHECK(coeffs(0, 0) == doctest::Approx(c * w).epsilon(1e-12));
  Eigen::MatrixXd rest = coeffs;
  rest(0, 0) = 0.0;
  CHECK(rest.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("haar transform round-trips and preserves energy") {
  const Eigen::MatrixXd img = random_image(32, 9);
  const Eigen::MatrixXd coeffs = haar2d_forward(img);
  CHECK(std::abs(coeffs.norm() - img.norm()) < 1e-12 * img.norm());  // Parseval
  const Eigen::MatrixXd back = haar2d_inverse(coeffs);
  CHECK((back - img).cwiseAbs().maxCoeff() < 1e-12 * img.cwiseAbs().maxCoeff());
}

TEST_CASE("haar rejects non-power-of-2 shapes") {
  CHECK_THROWS_AS(haar2d_forward(Eigen::MatrixXd::Zero(12, 12)), BadDimensions);
  CHECK_THROWS_AS(haar2d_forward(Eigen::MatrixXd::Zero(16, 8)), BadDimensions);
}

TEST_CASE("sparsify keeps everything at s = w^2 and nothing at s = 0") {
  const Eigen::MatrixXd img = random_image(16, 10);
  const SparsifyResult lossless = sparsify_image(img, 16 * 16);
  CHECK(std::isinf(lossless.psnr));
  CHECK((lossless.approximation - img).cwiseAbs().maxCoeff() < 1e-10);

  const SparsifyResult empty = sparsify_image(img, 0);
  CHECK(empty.approximation.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("s-term approximation PSNR is non-decreasing in s") {
  const Eigen::MatrixXd img = random_image(16, 11);
  double prev = -1.0;
  for (Eigen::Index s : {8, 32, 64, 128, 256}) {
    const double p = sparsify_image(img, s).psnr;
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("sparsify rejects s beyond the pixel count") {
  const Eigen::MatrixXd img = random_image(8, 12);
  CHECK_THROWS_AS(sparsify_image(img, 65), InvalidSparsity);
}

TEST_CASE("pgm round-trip") {
  Eigen::MatrixXd img(4, 6);
  int v = 0;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 6; ++c) img(r, c) = (v += 9) % 256;
  const char* path = "transforms_roundtrip.pgm";
  write_pgm(path, img);
  const Eigen::MatrixXd back = read_pgm(path);
  REQUIRE(back.rows() == 4);
  REQUIRE(back.cols() == 6);
  CHECK((back - img).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path);
}
