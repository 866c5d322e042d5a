#include "d2dcell/mode_selection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "d2dcell/special_functions.hpp"

namespace d2dcell {

namespace detail {

double mode_selection_prob_general(const NetworkParams& params) {
  const double eta_c = params.pathloss_cellular;
  const double eta_d = params.pathloss_d2d;
  const double bias = params.bias.value();
  const double pi_lambda = std::numbers::pi * params.bs_intensity;
  const double inv_ratio = params.max_tx_power / params.cutoff_threshold;  // R^eta_d
  const double a = eta_c / eta_d;
  const double arg = pi_lambda * std::pow(inv_ratio / bias, 2.0 / eta_c);
  // R^2 = inv_ratio^(2/eta_d)
  return (eta_c / eta_d) * std::pow(bias / inv_ratio, 2.0 / eta_d) *
         std::pow(pi_lambda, -a) * lower_incomplete_gamma(a, arg);
}

double mode_selection_prob_equal_exponent(const NetworkParams& params) {
  const double eta = params.pathloss_d2d;
  const double bias = params.bias.value();
  const double pi_lambda_r2 = std::numbers::pi * params.bs_intensity *
                              std::pow(params.max_tx_power / params.cutoff_threshold, 2.0 / eta);
  const double b = std::pow(bias, 2.0 / eta);
  return b / pi_lambda_r2 * (-std::expm1(-pi_lambda_r2 / b));
}

}  // namespace detail

ModeSelectionResult mode_selection_probability(const NetworkParams& params) {
  params.validate();
  ModeSelectionResult result;
  if (params.bias.is_infinite()) {
    result.prob_d2d = 1.0;
  } else if (params.bias.is_zero()) {
    result.prob_d2d = 0.0;
  } else if (params.pathloss_cellular == params.pathloss_d2d) {
    result.prob_d2d = detail::mode_selection_prob_equal_exponent(params);
  } else {
    result.prob_d2d = detail::mode_selection_prob_general(params);
  }
  const double p =
      std::pow(params.receiver_sensitivity / params.cutoff_threshold, 2.0 / params.pathloss_d2d);
  result.d2d_link_intensity = p * params.potential_d2d_intensity * result.prob_d2d;
  return result;
}

}  // namespace d2dcell
