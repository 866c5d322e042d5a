#include "d2dcell/network_params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace d2dcell {

BiasFactor BiasFactor::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("network params: bias must be >= 0 and finite (or the distinguished infinite value)");
  }
  BiasFactor b;
  b.value_ = value;
  b.infinite_ = false;
  return b;
}

BiasFactor BiasFactor::infinite() {
  BiasFactor b;
  b.infinite_ = true;
  b.value_ = 0.0;
  return b;
}

double BiasFactor::value() const {
  if (infinite_) throw std::logic_error("BiasFactor: value() called on the infinite bias");
  return value_;
}

std::string BiasFactor::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << value_;
  return os.str();
}

void NetworkParams::validate() const {
  const auto fail = [](const char* what) { throw std::invalid_argument(std::string("network params: ") + what); };
  if (!(bs_intensity > 0.0) || !std::isfinite(bs_intensity)) fail("bs_intensity must be > 0");
  if (!(ue_intensity > 0.0) || !std::isfinite(ue_intensity)) fail("ue_intensity must be > 0");
  if (!(potential_d2d_intensity >= 0.0) || !std::isfinite(potential_d2d_intensity)) {
    fail("potential_d2d_intensity must be >= 0");
  }
  if (potential_d2d_intensity > ue_intensity) {
    fail("potential_d2d_intensity must not exceed ue_intensity");
  }
  if (!(max_tx_power > 0.0) || !std::isfinite(max_tx_power)) fail("max_tx_power must be > 0");
  if (!(receiver_sensitivity > 0.0)) fail("receiver_sensitivity must be > 0");
  if (!(cutoff_threshold >= receiver_sensitivity)) {
    fail("cutoff_threshold must be >= receiver_sensitivity");
  }
  if (!(cutoff_threshold <= max_tx_power)) fail("cutoff_threshold must be <= max_tx_power");
  if (!(pathloss_cellular > 2.0)) fail("pathloss_cellular must be > 2");
  if (!(pathloss_d2d > 2.0)) fail("pathloss_d2d must be > 2");
  if (!(sinr_threshold > 0.0)) fail("sinr_threshold must be > 0");
  if (!(noise_power >= 0.0)) fail("noise_power must be >= 0");
  if (num_channels < 1) fail("num_channels must be >= 1");
}

DerivedQuantities derive(const NetworkParams& params) {
  params.validate();
  DerivedQuantities d;
  d.max_d2d_range_m = std::pow(params.max_tx_power / params.receiver_sensitivity, 1.0 / params.pathloss_d2d);
  d.d2d_range_m = std::pow(params.max_tx_power / params.cutoff_threshold, 1.0 / params.pathloss_d2d);
  d.d2d_survival_prob =
      std::pow(params.receiver_sensitivity / params.cutoff_threshold, 2.0 / params.pathloss_d2d);
  d.cellular_truncation_prob =
      std::exp(-std::numbers::pi * params.bs_intensity *
               std::pow(params.max_tx_power / params.cutoff_threshold, 2.0 / params.pathloss_cellular));

  const double active_potential = d.d2d_survival_prob * params.potential_d2d_intensity;
  const double rest = params.ue_intensity - active_potential;
  const double covered = 1.0 - d.cellular_truncation_prob;
  d.case_intensity[0] = rest * d.cellular_truncation_prob;
  d.case_intensity[1] = rest * covered;
  d.case_intensity[2] = active_potential * d.cellular_truncation_prob;
  d.case_intensity[3] = active_potential * covered;
  return d;
}

}  // namespace d2dcell
