#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/network_params.hpp"
#include "support/test_oracles.hpp"

using namespace d2dcell;

TEST_CASE("bias extremes") {
  NetworkParams p = testsupport::reference_params();
  p.bias = BiasFactor::finite(0.0);
  CHECK(mode_selection_probability(p).prob_d2d == 0.0);
  p.bias = BiasFactor::infinite();
  CHECK(mode_selection_probability(p).prob_d2d == 1.0);
  CHECK(mode_selection_probability(p).d2d_link_intensity ==
        doctest::Approx(0.1 * p.potential_d2d_intensity).epsilon(1e-12));
}

TEST_CASE("sampling oracle at the reference point") {
  const NetworkParams p = testsupport::reference_params();
  const double r_disk = std::pow(p.max_tx_power / p.cutoff_threshold, 1.0 / p.pathloss_d2d);
  testsupport::PairSampler sampler(0x5eedu, r_disk, p.bs_intensity);

  const int n = 10'000'000;
  std::int64_t hits = 0;
  const double bias = p.bias.value();
  for (int i = 0; i < n; ++i) {
    const double rd = sampler.draw_rd();
    const double rc = sampler.draw_rc();
    if (bias * std::pow(rd, -p.pathloss_d2d) >= std::pow(rc, -p.pathloss_cellular)) ++hits;
  }
  const double empirical = static_cast<double>(hits) / n;
  const double analytical = mode_selection_probability(p).prob_d2d;
  const double se = testsupport::binomial_se(analytical, n);
  CHECK(std::fabs(empirical - analytical) < 3.0 * se);
}

TEST_CASE("monotone nondecreasing in the bias") {
  NetworkParams p = testsupport::reference_params();
  double prev = -1.0;
  for (double log_bias = -3.0; log_bias <= 3.0 + 1e-9; log_bias += 0.1) {
    p.bias = BiasFactor::finite(std::pow(10.0, log_bias));
    const double prob = mode_selection_probability(p).prob_d2d;
    CHECK(prob >= prev);
    CHECK(prob >= 0.0);
    CHECK(prob <= 1.0);
    prev = prob;
  }
}

TEST_CASE("monotone nonincreasing in the BS intensity") {
  NetworkParams p = testsupport::reference_params();
  double prev = 2.0;
  for (const double per_km2 : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
    p.bs_intensity = per_km2 * 1e-6;
    const double prob = mode_selection_probability(p).prob_d2d;
    CHECK(prob <= prev);
    prev = prob;
  }
}

TEST_CASE("equal-exponent closed form agrees with the general form") {
  for (const double eta : {3.0, 4.0, 5.0}) {
    for (const double bias : {0.05, 0.5, 1.0, 2.0, 40.0}) {
      NetworkParams p = testsupport::reference_params();
      p.pathloss_cellular = eta;
      p.pathloss_d2d = eta;
      p.bias = BiasFactor::finite(bias);
      const double closed = detail::mode_selection_prob_equal_exponent(p);
      const double general = detail::mode_selection_prob_general(p);
      CHECK(closed == doctest::Approx(general).epsilon(1e-10));
    }
  }
}

TEST_CASE("unequal exponents stay in [0, 1] and respect the bias trend") {
  NetworkParams p = testsupport::reference_params();
  p.pathloss_cellular = 3.5;
  p.pathloss_d2d = 4.5;
  double prev = 0.0;
  for (const double bias : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    p.bias = BiasFactor::finite(bias);
    const double prob = mode_selection_probability(p).prob_d2d;
    CHECK(prob >= prev);
    CHECK(prob <= 1.0);
    prev = prob;
  }
}

TEST_CASE("unequal-exponent sampling oracle") {
  NetworkParams p = testsupport::reference_params();
  p.pathloss_cellular = 3.0;
  p.pathloss_d2d = 4.0;
  p.bias = BiasFactor::finite(2.0);
  const double r_disk = std::pow(p.max_tx_power / p.cutoff_threshold, 1.0 / p.pathloss_d2d);
  testsupport::PairSampler sampler(0xfeedu, r_disk, p.bs_intensity);
  const int n = 4'000'000;
  std::int64_t hits = 0;
  for (int i = 0; i < n; ++i) {
    const double rd = sampler.draw_rd();
    const double rc = sampler.draw_rc();
    if (2.0 * std::pow(rd, -4.0) >= std::pow(rc, -3.0)) ++hits;
  }
  const double empirical = static_cast<double>(hits) / n;
  const double analytical = mode_selection_probability(p).prob_d2d;
  CHECK(std::fabs(empirical - analytical) < 3.0 * testsupport::binomial_se(analytical, n));
}
