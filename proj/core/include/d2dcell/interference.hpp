#pragma once

#include "d2dcell/network_params.hpp"
#include "d2dcell/quadrature.hpp"

namespace d2dcell {

// Aggregate-interference source, named by interferer population and victim.
enum class InterferenceSource { d2d_on_d2d, cellular_on_d2d, cellular_on_bs, d2d_on_bs };

// BS-victim transforms have two algebraically equal routes: a semi-infinite
// path-loss quadrature valid for any exponent, and an arctan closed form at
// exponent 4. `automatic` picks the closed form when it applies.
enum class LtRoute { automatic, quadrature, closed_form };

// Laplace transform E[exp(-s I)] of one aggregate-interference component
// under the equi-dense PPP approximation. Power moments and the selection
// probability are cached at construction, so evaluating at many s values
// (outage sweeps, capacity integrals) stays cheap.
class InterferenceLt {
 public:
  InterferenceLt(InterferenceSource source, const NetworkParams& params,
                 QuadratureSpec spec = {});

  double operator()(double s) const { return evaluate(s, LtRoute::automatic); }
  double evaluate(double s, LtRoute route) const;
  // log of the transform; exact at underflow, used by capacity integrands.
  double log_evaluate(double s, LtRoute route = LtRoute::automatic) const;

  InterferenceSource source() const { return source_; }

 private:
  InterferenceSource source_;
  QuadratureSpec spec_;
  double eta_ = 0.0;            // path-loss exponent at the victim
  double density_ = 0.0;        // interferer intensity (already /num_channels)
  double power_moment_ = 0.0;   // E[P^(2/eta)] of the interferer population
  double gamma_pair_ = 0.0;     // Gamma(1+2/eta) * Gamma(1-2/eta), UE victims
  double exclusion_scale_ = 0.0;  // rho_o (cellular) or T*rho_o (D2D), BS victims
  bool trivial_ = false;          // no interferers: LT identically 1
};

// One-shot convenience wrapper.
double interference_lt(InterferenceSource source, double s, const NetworkParams& params,
                       LtRoute route = LtRoute::automatic, const QuadratureSpec& spec = {});

}  // namespace d2dcell
