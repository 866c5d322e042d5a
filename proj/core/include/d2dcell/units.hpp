#pragma once

#include <cmath>

// Conversions between the external units accepted at the tool boundary and
// the strict SI convention used internally (watts, meters, points per m^2).

namespace d2dcell::units {

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double value) { return 10.0 * std::log10(value); }

inline constexpr double per_km2_to_per_m2(double v) { return v * 1e-6; }

inline constexpr double per_m2_to_per_km2(double v) { return v * 1e6; }

inline constexpr double km2_to_m2(double area) { return area * 1e6; }

}  // namespace d2dcell::units
