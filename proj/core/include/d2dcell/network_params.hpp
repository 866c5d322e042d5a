#pragma once

#include <array>
#include <string>

namespace d2dcell {

// D2D bias factor. Zero disables D2D, the distinguished infinite value forces
// every potential D2D transmitter into D2D mode. Formulas branch on the
// infinite flag and take analytic limits rather than pushing IEEE infinity
// through expressions that could produce 0 * inf.
class BiasFactor {
 public:
  BiasFactor() = default;

  static BiasFactor finite(double value);
  static BiasFactor infinite();

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0.0; }
  double value() const;  // throws std::logic_error when infinite
  std::string str() const;

  friend bool operator==(const BiasFactor& a, const BiasFactor& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  double value_ = 1.0;
  bool infinite_ = false;
};

// All primitive model inputs, in strict SI units (watts, meters, per m^2).
// dBm / per-km^2 inputs are converted at the tool boundary.
struct NetworkParams {
  double bs_intensity = 5e-6;              // base stations per m^2
  double ue_intensity = 50e-6;             // UEs per m^2
  double potential_d2d_intensity = 25e-6;  // per m^2, <= ue_intensity
  double max_tx_power = 1.0;               // W
  double receiver_sensitivity = 1e-12;     // W  (-90 dBm)
  double cutoff_threshold = 1e-10;         // W  (-70 dBm)
  double pathloss_cellular = 4.0;          // > 2
  double pathloss_d2d = 4.0;               // > 2
  BiasFactor bias{};                       // T, dimensionless
  double sinr_threshold = 1.0;             // linear ratio
  double noise_power = 1e-12;              // W  (-90 dBm)
  int num_channels = 1;                    // >= 1

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Geometric and population quantities implied by NetworkParams.
//
// Case taxonomy (case_intensity[0..3] maps to cases 1..4):
//   1: no cellular coverage and no usable D2D receiver -> silent,
//   2: covered by a BS, no usable D2D receiver -> cellular only,
//   3: usable D2D receiver, not covered -> forced D2D,
//   4: both options -> decided by the bias rule.
// Coverage and the (truncation-surviving) D2D classification are treated as
// independent thinnings, so intensities are products of 'ue_intensity',
// 'p * potential_d2d_intensity' and the coverage probability.
struct DerivedQuantities {
  double max_d2d_range_m = 0.0;           // sensitivity-limited D2D proximity
  double d2d_range_m = 0.0;               // cutoff-limited D2D range
  double d2d_survival_prob = 0.0;         // p: D2D link survives power truncation
  double cellular_truncation_prob = 0.0;  // nearest-BS inversion exceeds max power
  std::array<double, 4> case_intensity{};  // per m^2
};

DerivedQuantities derive(const NetworkParams& params);

}  // namespace d2dcell
