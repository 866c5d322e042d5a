#include "d2dcell/interference.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/power_distributions.hpp"
#include "d2dcell/special_functions.hpp"

namespace d2dcell {

namespace {

// Integral of y / (y^eta + 1) over [lower, inf); the radial path-loss tail.
double pathloss_tail_integral(double eta, double lower, const QuadratureSpec& spec) {
  const auto integrand = [eta](double y) { return y / (std::pow(y, eta) + 1.0); };
  return integrate_semi_infinite(integrand, lower, spec);
}

}  // namespace

InterferenceLt::InterferenceLt(InterferenceSource source, const NetworkParams& params,
                               QuadratureSpec spec)
    : source_(source), spec_(spec) {
  params.validate();
  spec_.validate();
  const double eta_c = params.pathloss_cellular;
  const double eta_d = params.pathloss_d2d;
  const double lambda = params.bs_intensity;

  const bool d2d_interferers =
      source == InterferenceSource::d2d_on_d2d || source == InterferenceSource::d2d_on_bs;
  double d2d_link_intensity = 0.0;
  if (d2d_interferers) {
    d2d_link_intensity = mode_selection_probability(params).d2d_link_intensity;
    if (d2d_link_intensity == 0.0) {
      trivial_ = true;
      return;
    }
  }

  switch (source) {
    case InterferenceSource::d2d_on_d2d:
      eta_ = eta_d;
      density_ = d2d_link_intensity / params.num_channels;
      power_moment_ = d2d_mode_power_moment(2.0 / eta_d, params);
      break;
    case InterferenceSource::cellular_on_d2d:
      eta_ = eta_d;
      density_ = lambda;
      power_moment_ = cellular_power_moment(2.0 / eta_d, params, spec_);
      break;
    case InterferenceSource::cellular_on_bs:
      eta_ = eta_c;
      density_ = lambda;
      power_moment_ = cellular_power_moment(2.0 / eta_c, params, spec_);
      exclusion_scale_ = params.cutoff_threshold;
      break;
    case InterferenceSource::d2d_on_bs:
      eta_ = eta_c;
      density_ = d2d_link_intensity / params.num_channels;
      power_moment_ = d2d_mode_power_moment(2.0 / eta_c, params);
      exclusion_scale_ = params.bias.is_infinite()
                             ? std::numeric_limits<double>::infinity()
                             : params.bias.value() * params.cutoff_threshold;
      break;
  }
  if (eta_ <= 2.0) throw std::domain_error("InterferenceLt: path-loss exponent must be > 2");
  gamma_pair_ = gamma_function(1.0 + 2.0 / eta_) * gamma_function(1.0 - 2.0 / eta_);
}

double InterferenceLt::log_evaluate(double s, LtRoute route) const {
  if (!(s >= 0.0)) throw std::domain_error("InterferenceLt: s must be >= 0");
  if (s == 0.0 || trivial_) return 0.0;

  const bool bs_victim =
      source_ == InterferenceSource::cellular_on_bs || source_ == InterferenceSource::d2d_on_bs;
  if (!bs_victim) {
    if (route == LtRoute::closed_form || route == LtRoute::quadrature) {
      throw std::domain_error("InterferenceLt: route selection applies to BS-victim transforms only");
    }
    // Full-plane interference field with no exclusion region.
    return -std::numbers::pi * density_ * std::pow(s, 2.0 / eta_) * power_moment_ * gamma_pair_;
  }

  const bool closed_ok = eta_ == 4.0;
  LtRoute effective = route;
  if (route == LtRoute::automatic) {
    effective = closed_ok ? LtRoute::closed_form : LtRoute::quadrature;
  }
  if (effective == LtRoute::closed_form) {
    if (!closed_ok) {
      throw std::domain_error("InterferenceLt: closed form requires path-loss exponent 4");
    }
    return -std::numbers::pi * density_ * std::sqrt(s) * power_moment_ *
           std::atan(std::sqrt(s * exclusion_scale_));
  }
  const double lower = std::pow(s * exclusion_scale_, -1.0 / eta_);
  return -2.0 * std::numbers::pi * density_ * std::pow(s, 2.0 / eta_) * power_moment_ *
         pathloss_tail_integral(eta_, lower, spec_);
}

double InterferenceLt::evaluate(double s, LtRoute route) const {
  return std::exp(log_evaluate(s, route));
}

double interference_lt(InterferenceSource source, double s, const NetworkParams& params,
                       LtRoute route, const QuadratureSpec& spec) {
  return InterferenceLt(source, params, spec).evaluate(s, route);
}

}  // namespace d2dcell
