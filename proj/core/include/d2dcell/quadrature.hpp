#pragma once

#include <functional>

#include "d2dcell/errors.hpp"

namespace d2dcell {

struct QuadratureSpec {
  double relative_tolerance = 1e-8;
  double absolute_tolerance = 1e-12;
  int max_subdivisions = 200;

  void validate() const;  // std::invalid_argument on violation
};

using Integrand = std::function<double(double)>;

// Adaptive 15-point Gauss-Kronrod over [lower, upper]. All nodes are interior,
// so integrable endpoint singularities of type x^(c-1), c > 0, are handled by
// error-driven subdivision refinement toward the endpoint.
double integrate_finite(const Integrand& f, double lower, double upper,
                        const QuadratureSpec& spec = {});

// Integral over [lower, inf). The ray is mapped to a finite interval via
// u = 1/(1 + x - lower) and then integrated adaptively. Requires the
// integrand to decay at least as fast as x^(1-eta) with eta > 2.
double integrate_semi_infinite(const Integrand& f, double lower,
                               const QuadratureSpec& spec = {});

}  // namespace d2dcell
