#include "d2dcell/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "d2dcell/errors.hpp"

namespace d2dcell {

namespace {

constexpr int kMaxIterations = 500;

// gamma(a, x) = x^a e^(-x) * sum_{n>=0} x^n / (a (a+1) ... (a+n)), for x < a+1.
double lower_gamma_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon()) {
      return sum * std::exp(-x + a * std::log(x));
    }
  }
  throw ConvergenceError("lower_incomplete_gamma: series did not converge");
}

// Modified Lentz continued fraction for the upper tail Gamma(a, x), x >= a+1.
double upper_gamma_continued_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < std::numeric_limits<double>::epsilon()) {
      return std::exp(-x + a * std::log(x)) * h;
    }
  }
  throw ConvergenceError("lower_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

double gamma_function(double a) {
  if (!(a > 0.0)) throw std::domain_error("gamma_function: a must be > 0");
  return std::tgamma(a);
}

double lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("lower_incomplete_gamma: a must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("lower_incomplete_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;
  // Deep in the upper tail the complement underflows; saturate to Gamma(a)
  // before forming exponentials.
  if (x > 700.0 && x >= a + 1.0) return gamma_function(a);
  if (x < a + 1.0) return lower_gamma_series(a, x);
  return gamma_function(a) - upper_gamma_continued_fraction(a, x);
}

double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("upper_incomplete_gamma: a must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("upper_incomplete_gamma: x must be >= 0");
  if (x == 0.0) return gamma_function(a);
  if (x >= a + 1.0) {
    if (x > 700.0) return 0.0;
    return upper_gamma_continued_fraction(a, x);
  }
  return gamma_function(a) - lower_gamma_series(a, x);
}

double regularized_lower_gamma(double a, double x) {
  return lower_incomplete_gamma(a, x) / gamma_function(a);
}

}  // namespace d2dcell
