#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "d2dcell/quadrature.hpp"
#include "support/test_oracles.hpp"

using d2dcell::integrate_finite;
using d2dcell::integrate_semi_infinite;
using d2dcell::QuadratureSpec;

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, {0.0, 1e-12, 200}),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, {1e-8, -1.0, 200}),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, {1e-8, 1e-12, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("finite: constants and endpoint singularity") {
  CHECK(integrate_finite([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  // x^(-1/2): the singularity class shared by all the power pdfs at eta = 4
  CHECK(integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-8));
  // x^(2/eta - 1) for eta = 3
  CHECK(integrate_finite([](double x) { return std::pow(x, 2.0 / 3.0 - 1.0); }, 0.0, 1.0) ==
        doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("semi-infinite: exponential and path-loss tails") {
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
  // the radial tail behind the closed-form outage at eta_c = 4
  CHECK(integrate_semi_infinite([](double x) { return x / (x * x * x * x + 1.0); }, 1.0) ==
        doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-8));
}

TEST_CASE("semi-infinite vs dense Simpson oracle") {
  const auto f = [](double x) { return x / (x * x * x * x + 1.0); };
  const double oracle = testsupport::simpson_fixed(f, 0.5, 1e4, 4'000'000);
  CHECK(integrate_semi_infinite(f, 0.5) == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("path-loss tail matches the arctan antiderivative family") {
  for (const double lower : {0.25, 1.0, 4.0}) {
    const double expected = (std::numbers::pi / 2.0 - std::atan(lower * lower)) / 2.0;
    const double got =
        integrate_semi_infinite([](double x) { return x / (std::pow(x, 4.0) + 1.0); }, lower);
    CHECK(got == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("self-consistency when tightening the tolerance") {
  const auto f = [](double x) { return std::exp(-x) / std::sqrt(x + 1e-3); };
  QuadratureSpec loose;
  loose.relative_tolerance = 1e-6;
  QuadratureSpec tight = loose;
  tight.relative_tolerance = 5e-7;
  const double a = integrate_semi_infinite(f, 0.0, loose);
  const double b = integrate_semi_infinite(f, 0.0, tight);
  CHECK(std::fabs(a - b) < loose.relative_tolerance * std::fabs(a));
}

TEST_CASE("convergence failure is reported distinctly") {
  // 1/x on (0, 1] diverges; the budget must run out, not return a number
  CHECK_THROWS_AS(integrate_finite([](double x) { return 1.0 / x; }, 0.0, 1.0),
                  d2dcell::ConvergenceError);
  // non-decaying integrand on a ray
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 0.0),
                  d2dcell::ConvergenceError);
}
