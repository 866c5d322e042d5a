#pragma once

// Shared oracle helpers for the test suites. Everything here is deliberately
// independent of the library's adaptive quadrature / closed forms so that it
// can serve as a cross-check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "d2dcell/network_params.hpp"

namespace testsupport {

// Fixed-grid composite Simpson rule; no adaptivity, no shared code with the
// library integrator.
inline double simpson_fixed(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; i += 2) sum += 4.0 * f(a + i * h);
  for (int i = 2; i < n; i += 2) sum += 2.0 * f(a + i * h);
  return sum * h / 3.0;
}

// Kolmogorov-Smirnov distance between a sample and a cdf. Sorts in place.
inline double ks_distance(std::vector<double>& sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& v) {
  MeanSe r;
  for (const double x : v) r.mean += x;
  r.mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (const double x : v) ss += (x - r.mean) * (x - r.mean);
  r.se = std::sqrt(ss / (static_cast<double>(v.size()) - 1.0) / static_cast<double>(v.size()));
  return r;
}

// Standard error of a Bernoulli fraction.
inline double binomial_se(double p, double n) { return std::sqrt(std::max(p * (1.0 - p), 1e-12) / n); }

// Reference operating point used throughout the tests (the library defaults).
inline d2dcell::NetworkParams reference_params() { return d2dcell::NetworkParams{}; }

// Samples the geometric pair (r_d, r_c): D2D link distance uniform in the
// disk of radius r_disk, nearest-BS distance Rayleigh with density
// 2*pi*lambda*r*exp(-pi*lambda*r^2).
struct PairSampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> unit{0.0, 1.0};
  double r_disk;
  double pi_lambda;

  PairSampler(std::uint64_t seed, double r_disk_, double lambda)
      : rng(seed), r_disk(r_disk_), pi_lambda(3.14159265358979323846 * lambda) {}

  double draw_rd() { return r_disk * std::sqrt(unit(rng)); }
  double draw_rc() { return std::sqrt(-std::log(1.0 - unit(rng)) / pi_lambda); }
};

}  // namespace testsupport
