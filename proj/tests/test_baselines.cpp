#include <doctest.h>

#include <cmath>

#include "mfs/baselines.hpp"
#include "mfs/embed.hpp"
#include "mfs/errors.hpp"
#include "mfs/harness.hpp"
#include "mfs/pipeline.hpp"

using namespace mfs;

namespace {

SensingOperator test_operator(Eigen::Index n, Eigen::Index q, Eigen::Index k, std::uint64_t seed) {
  OperatorSpec spec;
  spec.n = n;
  spec.q = q;
  spec.k = k;
  spec.inner_dist = InnerDist::GaussianVar1OverQ;
  spec.block_dist = BlockDist::StandardNormal;
  spec.seed = seed;
  return make_operator(spec);
}

}  // namespace

TEST_CASE("ght is stationary at the zero signal") {
  const SensingOperator op = test_operator(64, 16, 4, 1);
  SparseSignal x;
  x.values = Eigen::VectorXd::Zero(64);
  const FeatureVector y = forward(op, x, LinkType::RealSine, 0.0, 0);
  const GhtResult res = ght(y, op, 5);
  CHECK(res.estimate.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ght with zero step returns the zero initializer") {
  const SensingOperator op = test_operator(64, 16, 4, 2);
  const SparseSignal x = synthesize_signal(64, 5, 1.0, 3);
  const FeatureVector y = forward(op, x, LinkType::RealSine, 0.0, 0);
  GhtConfig cfg;
  cfg.step = 0.0;
  const GhtResult res = ght(y, op, 5, cfg);
  CHECK(res.estimate.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ght rejects complex features") {
  const SensingOperator op = test_operator(64, 16, 4, 4);
  const SparseSignal x = synthesize_signal(64, 5, 1.0, 5);
  const FeatureVector y = forward(op, x, LinkType::ComplexExp, 0.0, 0);
  CHECK_THROWS_AS(ght(y, op, 5), InvalidSpec);
}

TEST_CASE("ght succeeds in the small-norm regime and fails at large norm") {
  int small_ok = 0, large_ok = 0;
  const int trials = 10;
  for (int trial = 0; trial < trials; ++trial) {
    const SensingOperator op = test_operator(1024, 200, 6, 100 + trial);
    for (double norm : {1.0, 30.0}) {
      const SparseSignal x = synthesize_signal(1024, 10, norm, 200 + trial);
      const FeatureVector y = forward(op, x, LinkType::RealSine, 0.0, 0);
      const GhtResult res = ght(y, op, 10);
      const double rel = (res.estimate.values - x.values).norm() / norm;
      if (norm == 1.0 && rel < 0.05) ++small_ok;
      if (norm == 30.0 && rel < 0.05) ++large_ok;
    }
  }
  CHECK(small_ok >= 7);
  CHECK(large_ok <= 1);
}

TEST_CASE("one_step_threshold rejects zero features") {
  const SensingOperator op = test_operator(64, 16, 4, 6);
  FeatureVector y;
  y.link = LinkType::RealSine;
  y.rdata = Eigen::VectorXd::Zero(op.m());
  CHECK_THROWS_AS(one_step_threshold(y, op, 5), ZeroEstimate);
}

TEST_CASE("one_step_threshold output has unit norm") {
  const SensingOperator op = test_operator(64, 16, 4, 7);
  const SparseSignal x = synthesize_signal(64, 5, 2.0, 8);
  for (LinkType link : {LinkType::RealSine, LinkType::ComplexExp}) {
    const FeatureVector y = forward(op, x, link, 0.1, 9);
    const SparseSignal est = one_step_threshold(y, op, 5);
    CHECK(std::abs(est.values.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("one_step_threshold is invariant to positive scaling of y") {
  const SensingOperator op = test_operator(64, 16, 4, 10);
  const SparseSignal x = synthesize_signal(64, 5, 2.0, 11);
  FeatureVector y = forward(op, x, LinkType::RealSine, 0.0, 0);
  const SparseSignal base = one_step_threshold(y, op, 5);
  y.rdata *= 3.5;
  const SparseSignal scaled = one_step_threshold(y, op, 5);
  CHECK((base.values - scaled.values).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("one_step direction is correlated but weaker than full recovery") {
  const SensingOperator op = test_operator(512, 128, 6, 12);
  const SparseSignal x = synthesize_signal(512, 8, 1.0, 13);
  const FeatureVector y = forward(op, x, LinkType::RealSine, 0.0, 0);
  const SparseSignal est = one_step_threshold(y, op, 8);
  const double cosine = est.values.dot(x.values) / x.values.norm();
  CHECK(cosine > 0.2);  // direction information present
}
