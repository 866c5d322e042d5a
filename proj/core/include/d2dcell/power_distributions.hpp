#pragma once

#include "d2dcell/network_params.hpp"
#include "d2dcell/quadrature.hpp"

namespace d2dcell {

// Transmit-power laws under truncated channel inversion. All pdfs share an
// integrable x^(2/eta - 1) singularity at the origin; x <= 0 is a domain
// error, values above the support return 0. Moments take alpha > 0 and
// return 1 exactly at alpha == 0 as a convenience.

// UE operating in D2D mode: power rho_o * r_d^eta_d given the bias rule holds.
double d2d_mode_power_pdf(double x, const NetworkParams& params);
double d2d_mode_power_cdf(double x, const NetworkParams& params);
double d2d_mode_power_moment(double alpha, const NetworkParams& params);

// Covered non-potential UE (case 2): power rho_o * r_c^eta_c, truncated at
// the maximum transmit power.
double case2_power_pdf(double x, const NetworkParams& params);
double case2_power_cdf(double x, const NetworkParams& params);
double case2_power_moment(double alpha, const NetworkParams& params);

// Probability that a case-4 UE (covered, usable D2D receiver) ends up in
// cellular mode. Continuous in the bias, 1 at bias 0, 0 at infinite bias.
double prob_cellular_given_case4(const NetworkParams& params);

// Case-4 UE operating in cellular mode. The closed-form moment printed for
// this law is dimensionally inconsistent with its own pdf, so moments are
// evaluated by quadrature of the pdf.
double case4_power_pdf(double x, const NetworkParams& params);
double case4_power_moment(double alpha, const NetworkParams& params,
                          const QuadratureSpec& spec = {});

// Generic cellular-mode UE: mixture of the case-2 and case-4 laws with the
// D2D-link weight p * prob_d2d * D / U.
double cellular_power_moment(double alpha, const NetworkParams& params,
                             const QuadratureSpec& spec = {});

// Mean transmit power of a truncation-surviving potential D2D UE, averaged
// over its realized mode: D2D when the bias rule holds, cellular when it
// fails and the UE is covered, and D2D again when it fails uncovered (no
// cellular option). Cost of the mode assignment; scheduling contention is
// deliberately not modeled here.
double potential_d2d_mean_power(const NetworkParams& params, const QuadratureSpec& spec = {});

enum class PowerKind { d2d_mode, case2_cellular, case4_cellular, generic_cellular };

// Thin facade bundling one of the laws above with its parameter set.
class PowerDistribution {
 public:
  PowerDistribution(PowerKind kind, NetworkParams params);

  PowerKind kind() const { return kind_; }
  const NetworkParams& params() const { return params_; }
  double support_upper() const;

  // generic_cellular is a two-component mixture with no single pdf; pdf()
  // throws std::logic_error for it and moments remain available.
  double pdf(double x) const;
  double moment(double alpha) const;

 private:
  PowerKind kind_;
  NetworkParams params_;
};

}  // namespace d2dcell
