#include "d2dcell/power_distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/special_functions.hpp"

namespace d2dcell {

namespace {

void check_power_arg(double x, const char* who) {
  if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": x must be > 0");
}

void check_moment_order(double alpha, const char* who) {
  if (alpha < 0.0) throw std::domain_error(std::string(who) + ": alpha must be >= 0");
}

struct Common {
  double pi_lambda;
  double eta_c, eta_d;
  double rho, pu;
  double arg_full;      // pi*lambda*(pu/rho)^(2/eta_c)
  double denom_full;    // 1 - exp(-arg_full)
};

Common common(const NetworkParams& p) {
  Common c;
  c.pi_lambda = std::numbers::pi * p.bs_intensity;
  c.eta_c = p.pathloss_cellular;
  c.eta_d = p.pathloss_d2d;
  c.rho = p.cutoff_threshold;
  c.pu = p.max_tx_power;
  c.arg_full = c.pi_lambda * std::pow(c.pu / c.rho, 2.0 / c.eta_c);
  c.denom_full = -std::expm1(-c.arg_full);
  return c;
}

}  // namespace

double d2d_mode_power_pdf(double x, const NetworkParams& params) {
  params.validate();
  check_power_arg(x, "d2d_mode_power_pdf");
  if (x > params.max_tx_power) return 0.0;
  const Common c = common(params);
  if (params.bias.is_infinite()) {
    // Unconditioned inversion power of a receiver uniform in the cutoff disk.
    return 2.0 * std::pow(x, 2.0 / c.eta_d - 1.0) / (c.eta_d * std::pow(c.pu, 2.0 / c.eta_d));
  }
  if (params.bias.is_zero()) return 0.0;  // mass collapses to the origin
  const double t_rho = params.bias.value() * c.rho;
  const double a = c.eta_c / c.eta_d;
  const double norm = lower_incomplete_gamma(a, c.pi_lambda * std::pow(c.pu / t_rho, 2.0 / c.eta_c));
  return 2.0 * std::pow(x, 2.0 / c.eta_d - 1.0) * std::pow(c.pi_lambda, a) *
         std::exp(-c.pi_lambda * std::pow(x / t_rho, 2.0 / c.eta_c)) /
         (c.eta_c * std::pow(t_rho, 2.0 / c.eta_d) * norm);
}

double d2d_mode_power_cdf(double x, const NetworkParams& params) {
  params.validate();
  if (x <= 0.0) return 0.0;
  const Common c = common(params);
  if (x >= params.max_tx_power) return 1.0;
  if (params.bias.is_infinite()) return std::pow(x / c.pu, 2.0 / c.eta_d);
  if (params.bias.is_zero()) return 1.0;
  const double t_rho = params.bias.value() * c.rho;
  const double a = c.eta_c / c.eta_d;
  return lower_incomplete_gamma(a, c.pi_lambda * std::pow(x / t_rho, 2.0 / c.eta_c)) /
         lower_incomplete_gamma(a, c.pi_lambda * std::pow(c.pu / t_rho, 2.0 / c.eta_c));
}

double d2d_mode_power_moment(double alpha, const NetworkParams& params) {
  params.validate();
  check_moment_order(alpha, "d2d_mode_power_moment");
  if (alpha == 0.0) return 1.0;
  const Common c = common(params);
  if (params.bias.is_infinite()) return 2.0 * std::pow(c.pu, alpha) / (alpha * c.eta_d + 2.0);
  if (params.bias.is_zero()) return 0.0;
  const double t_rho = params.bias.value() * c.rho;
  const double a = c.eta_c / c.eta_d;
  const double b = c.pi_lambda * std::pow(c.pu / t_rho, 2.0 / c.eta_c);
  return std::pow(t_rho, alpha) * lower_incomplete_gamma(alpha * c.eta_c / 2.0 + a, b) /
         (std::pow(c.pi_lambda, alpha * c.eta_c / 2.0) * lower_incomplete_gamma(a, b));
}

double case2_power_pdf(double x, const NetworkParams& params) {
  params.validate();
  check_power_arg(x, "case2_power_pdf");
  if (x > params.max_tx_power) return 0.0;
  const Common c = common(params);
  return 2.0 * c.pi_lambda * std::pow(x, 2.0 / c.eta_c - 1.0) *
         std::exp(-c.pi_lambda * std::pow(x / c.rho, 2.0 / c.eta_c)) /
         (c.eta_c * std::pow(c.rho, 2.0 / c.eta_c) * c.denom_full);
}

double case2_power_cdf(double x, const NetworkParams& params) {
  params.validate();
  if (x <= 0.0) return 0.0;
  const Common c = common(params);
  if (x >= params.max_tx_power) return 1.0;
  return -std::expm1(-c.pi_lambda * std::pow(x / c.rho, 2.0 / c.eta_c)) / c.denom_full;
}

double case2_power_moment(double alpha, const NetworkParams& params) {
  params.validate();
  check_moment_order(alpha, "case2_power_moment");
  if (alpha == 0.0) return 1.0;
  const Common c = common(params);
  return std::pow(c.rho, alpha) *
         lower_incomplete_gamma(alpha * c.eta_c / 2.0 + 1.0, c.arg_full) /
         (std::pow(c.pi_lambda, alpha * c.eta_c / 2.0) * c.denom_full);
}

double prob_cellular_given_case4(const NetworkParams& params) {
  params.validate();
  if (params.bias.is_infinite()) return 0.0;
  if (params.bias.is_zero()) return 1.0;
  const Common c = common(params);
  const double bias = params.bias.value();
  const double m = std::min(1.0, std::pow(bias, 2.0 / c.eta_d));
  const double cap = std::max(bias, 1.0);
  const double a = c.eta_c / c.eta_d;
  const double tail = c.eta_c * std::pow(bias * c.rho, 2.0 / c.eta_d) *
                      lower_incomplete_gamma(a, c.pi_lambda * std::pow(c.pu / (cap * c.rho), 2.0 / c.eta_c)) /
                      (c.eta_d * std::pow(c.pu, 2.0 / c.eta_d) * std::pow(c.pi_lambda, a) * c.denom_full);
  return 1.0 - m + m / c.denom_full - tail;
}

double case4_power_pdf(double x, const NetworkParams& params) {
  params.validate();
  check_power_arg(x, "case4_power_pdf");
  if (params.bias.is_infinite()) {
    throw std::domain_error("case4_power_pdf: no cellular-mode case-4 population at infinite bias");
  }
  const Common c = common(params);
  const double bias = params.bias.value();
  const double upper = c.pu / std::max(bias, 1.0);
  if (x > upper) return 0.0;
  const double pu_d = std::pow(c.pu, 2.0 / c.eta_d);
  const double weight = pu_d - std::pow(bias * x, 2.0 / c.eta_d);
  return 2.0 * c.pi_lambda * std::pow(x, 2.0 / c.eta_c - 1.0) * weight *
         std::exp(-c.pi_lambda * std::pow(x / c.rho, 2.0 / c.eta_c)) /
         (prob_cellular_given_case4(params) * c.eta_c * std::pow(c.rho, 2.0 / c.eta_c) * pu_d *
          c.denom_full);
}

double case4_power_moment(double alpha, const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  check_moment_order(alpha, "case4_power_moment");
  if (alpha == 0.0) return 1.0;
  if (params.bias.is_infinite()) return 0.0;  // analytic limit: support collapses
  const double upper = params.max_tx_power / std::max(params.bias.value(), 1.0);
  const auto integrand = [alpha, &params](double x) {
    return std::pow(x, alpha) * case4_power_pdf(x, params);
  };
  return integrate_finite(integrand, 0.0, upper, spec);
}

double cellular_power_moment(double alpha, const NetworkParams& params,
                             const QuadratureSpec& spec) {
  params.validate();
  check_moment_order(alpha, "cellular_power_moment");
  if (alpha == 0.0) return 1.0;
  const double p =
      std::pow(params.receiver_sensitivity / params.cutoff_threshold, 2.0 / params.pathloss_d2d);
  const double weight = p * mode_selection_probability(params).prob_d2d *
                        params.potential_d2d_intensity / params.ue_intensity;
  const double m2 = case2_power_moment(alpha, params);
  if (weight == 0.0) return m2;
  return (1.0 - weight) * m2 + weight * case4_power_moment(alpha, params, spec);
}

double potential_d2d_mean_power(const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  const Common c = common(params);
  const double r_d2d = std::pow(c.pu / c.rho, 1.0 / c.eta_d);
  const double d_max = std::pow(c.pu / c.rho, 1.0 / c.eta_c);
  const double trunc = std::exp(-c.pi_lambda * d_max * d_max);
  const double gamma_scale = std::pow(c.pi_lambda, -c.eta_c / 2.0);
  const bool bias_inf = params.bias.is_infinite();
  const bool bias_zero = params.bias.is_zero();
  const double bias = bias_inf || bias_zero ? 0.0 : params.bias.value();

  const auto integrand = [&](double r) {
    // Distance beyond which the nearest BS loses to the biased D2D link.
    double g;
    if (bias_inf) {
      g = 0.0;
    } else if (bias_zero) {
      g = std::numeric_limits<double>::infinity();
    } else {
      g = std::pow(std::pow(r, c.eta_d) / bias, 1.0 / c.eta_c);
    }
    const double keep_d2d = std::exp(-c.pi_lambda * g * g);  // bias rule holds
    // Uncovered UEs fall back to D2D, except at zero bias where D2D is off.
    const double forced_d2d = bias_zero ? 0.0 : std::max(0.0, trunc - keep_d2d);
    const double gmin = std::min(g, d_max);
    const double cell_mean =
        c.rho * gamma_scale *
        lower_incomplete_gamma(c.eta_c / 2.0 + 1.0, c.pi_lambda * gmin * gmin);
    const double d2d_power = c.rho * std::pow(r, c.eta_d);
    return 2.0 * r / (r_d2d * r_d2d) * (d2d_power * (keep_d2d + forced_d2d) + cell_mean);
  };
  return integrate_finite(integrand, 0.0, r_d2d, spec);
}

PowerDistribution::PowerDistribution(PowerKind kind, NetworkParams params)
    : kind_(kind), params_(std::move(params)) {
  params_.validate();
}

double PowerDistribution::support_upper() const {
  switch (kind_) {
    case PowerKind::d2d_mode:
    case PowerKind::case2_cellular:
    case PowerKind::generic_cellular:
      return params_.max_tx_power;
    case PowerKind::case4_cellular:
      if (params_.bias.is_infinite()) return 0.0;
      return params_.max_tx_power / std::max(params_.bias.value(), 1.0);
  }
  return params_.max_tx_power;
}

double PowerDistribution::pdf(double x) const {
  switch (kind_) {
    case PowerKind::d2d_mode:
      return d2d_mode_power_pdf(x, params_);
    case PowerKind::case2_cellular:
      return case2_power_pdf(x, params_);
    case PowerKind::case4_cellular:
      return case4_power_pdf(x, params_);
    case PowerKind::generic_cellular:
      throw std::logic_error("PowerDistribution: the generic cellular law is a mixture; only moments are exposed");
  }
  throw std::logic_error("PowerDistribution: unknown kind");
}

double PowerDistribution::moment(double alpha) const {
  switch (kind_) {
    case PowerKind::d2d_mode:
      return d2d_mode_power_moment(alpha, params_);
    case PowerKind::case2_cellular:
      return case2_power_moment(alpha, params_);
    case PowerKind::case4_cellular:
      return case4_power_moment(alpha, params_);
    case PowerKind::generic_cellular:
      return cellular_power_moment(alpha, params_);
  }
  throw std::logic_error("PowerDistribution: unknown kind");
}

}  // namespace d2dcell
