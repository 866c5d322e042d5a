#include "d2dcell/outage_rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/network_params.hpp"

namespace d2dcell {

namespace {

OutageResult assemble_outage(const NetworkParams& params, const InterferenceLt& lt_cell,
                             const InterferenceLt& lt_d2d, LtRoute route) {
  const double s = params.sinr_threshold / params.cutoff_threshold;
  OutageResult r;
  r.noise_factor = std::exp(-s * params.noise_power);
  r.lt_cellular = lt_cell.evaluate(s, route);
  r.lt_d2d = lt_d2d.evaluate(s, route);
  r.outage_probability = 1.0 - r.noise_factor * r.lt_cellular * r.lt_d2d;
  return r;
}

double capacity_integral(const NetworkParams& params, const InterferenceLt& lt_cell,
                         const InterferenceLt& lt_d2d, const QuadratureSpec& spec) {
  const double rho = params.cutoff_threshold;
  const double noise = params.noise_power;
  const auto integrand = [&](double t) {
    const double w = std::expm1(t);  // SINR threshold at rate t
    const double s = w / rho;
    const double noise_exponent = noise > 0.0 ? -w * noise / rho : 0.0;
    const double exponent = noise_exponent + lt_cell.log_evaluate(s) + lt_d2d.log_evaluate(s);
    return std::exp(exponent);
  };
  return integrate_semi_infinite(integrand, 0.0, spec);
}

}  // namespace

OutageResult d2d_outage(const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  const InterferenceLt lt_cell(InterferenceSource::cellular_on_d2d, params, spec);
  const InterferenceLt lt_d2d(InterferenceSource::d2d_on_d2d, params, spec);
  return assemble_outage(params, lt_cell, lt_d2d, LtRoute::automatic);
}

OutageResult cellular_outage(const NetworkParams& params, LtRoute route,
                             const QuadratureSpec& spec) {
  params.validate();
  const InterferenceLt lt_cell(InterferenceSource::cellular_on_bs, params, spec);
  const InterferenceLt lt_d2d(InterferenceSource::d2d_on_bs, params, spec);
  return assemble_outage(params, lt_cell, lt_d2d, route);
}

double link_capacity(LinkMode mode, const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  if (mode == LinkMode::d2d) {
    const InterferenceLt lt_cell(InterferenceSource::cellular_on_d2d, params, spec);
    const InterferenceLt lt_d2d(InterferenceSource::d2d_on_d2d, params, spec);
    return capacity_integral(params, lt_cell, lt_d2d, spec);
  }
  const InterferenceLt lt_cell(InterferenceSource::cellular_on_bs, params, spec);
  const InterferenceLt lt_d2d(InterferenceSource::d2d_on_bs, params, spec);
  return capacity_integral(params, lt_cell, lt_d2d, spec);
}

double potential_d2d_rate(const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  const DerivedQuantities d = derive(params);
  const double prob_d2d = mode_selection_probability(params).prob_d2d;
  const double active_potential = d.d2d_survival_prob * params.potential_d2d_intensity;

  double rate = 0.0;
  if (prob_d2d > 0.0) {
    rate += prob_d2d * link_capacity(LinkMode::d2d, params, spec);
  }
  if (prob_d2d < 1.0) {
    const double denom = (1.0 - prob_d2d) * active_potential +
                         (params.ue_intensity - active_potential) * (1.0 - d.cellular_truncation_prob);
    if (!(denom > 0.0)) {
      throw std::domain_error("potential_d2d_rate: no cellular-share population (denominator is 0)");
    }
    // Two hops through the BS halve the effective rate.
    rate += 0.5 * (1.0 - prob_d2d) * params.bs_intensity / denom *
            link_capacity(LinkMode::cellular, params, spec);
  }
  return rate;
}

double total_network_capacity(const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  const ModeSelectionResult sel = mode_selection_probability(params);
  double capacity = params.bs_intensity * link_capacity(LinkMode::cellular, params, spec);
  if (sel.d2d_link_intensity > 0.0) {
    capacity += sel.d2d_link_intensity * link_capacity(LinkMode::d2d, params, spec);
  }
  return capacity;
}

}  // namespace d2dcell
