#pragma once

#include <span>
#include <string>
#include <vector>

#include "d2dcell/network_params.hpp"
#include "d2dcell/quadrature.hpp"
#include "d2dcell/result_table.hpp"
#include "d2dcell/simulation.hpp"

namespace d2dcell {

enum class GridSpacing { linear, logarithmic, decibel };

// One-parameter sweep description. Grid values are stored in the parameter's
// input domain: watts for cutoff_threshold, linear ratio for sinr_threshold,
// per m^2 for bs_intensity, bare for bias (decibel grids are converted when
// built). Decibel spacing is only meaningful for the power-like parameters.
struct SweepSpec {
  std::string parameter;  // bias | cutoff_threshold | sinr_threshold | bs_intensity
  std::vector<double> grid;
  std::vector<std::string> metrics;  // empty = all

  static std::vector<double> make_grid(double start, double stop, int count, GridSpacing spacing,
                                       const std::string& parameter);
  void validate() const;
};

// Metric column names understood by sweep_table / --metrics.
const std::vector<std::string>& sweep_metric_names();

// Single-point table with every analytical metric (one row).
ResultTable analyze_table(const NetworkParams& params, const QuadratureSpec& spec = {});

// One row per grid point, evaluated concurrently. A failing point records
// its error class in the status column (0 ok, 2 parameter, 3 numerical) and
// nan metric cells; the sweep continues.
ResultTable sweep_table(const NetworkParams& base, const SweepSpec& sweep,
                        const QuadratureSpec& spec = {}, int num_threads = 0);

// Analytical vs Monte Carlo outage, one row per SINR threshold, with
// standard errors and absolute gaps.
ResultTable validation_table(const NetworkParams& params, const SimulationConfig& config,
                             std::span<const double> theta_grid,
                             const QuadratureSpec& spec = {});

}  // namespace d2dcell
