#pragma once

namespace d2dcell {

// Gamma(a) for a > 0.
double gamma_function(double a);

// Lower incomplete gamma: integral of t^(a-1) e^(-t) over [0, x], for a > 0
// and x >= 0. Evaluated by series expansion for x < a + 1 and by the
// continued fraction of the complement otherwise.
double lower_incomplete_gamma(double a, double x);

// Gamma(a) - lower_incomplete_gamma(a, x), provided as a convenience.
double upper_incomplete_gamma(double a, double x);

// lower_incomplete_gamma(a, x) / Gamma(a), in [0, 1].
double regularized_lower_gamma(double a, double x);

}  // namespace d2dcell
