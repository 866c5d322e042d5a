#pragma once

#include "d2dcell/network_params.hpp"

namespace d2dcell {

struct ModeSelectionResult {
  double prob_d2d = 0.0;            // probability a potential D2D UE picks D2D
  double d2d_link_intensity = 0.0;  // per m^2: p * D * prob_d2d
};

// Probability that a potential D2D transmitter (with truncation-reduced range)
// satisfies the biased link-quality rule T * r_d^(-eta_d) >= r_c^(-eta_c),
// with r_d uniform in the disk of the cutoff-limited range and r_c the
// Rayleigh nearest-BS distance. bias = 0 gives exactly 0, the infinite bias
// exactly 1. Equal path-loss exponents use the exponential closed form.
ModeSelectionResult mode_selection_probability(const NetworkParams& params);

namespace detail {
// Incomplete-gamma form valid for any exponent pair; exposed for cross-checks
// against the equal-exponent closed form.
double mode_selection_prob_general(const NetworkParams& params);
double mode_selection_prob_equal_exponent(const NetworkParams& params);
}  // namespace detail

}  // namespace d2dcell
