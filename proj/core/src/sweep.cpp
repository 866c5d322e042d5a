#include "d2dcell/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "d2dcell/mode_selection.hpp"
#include "d2dcell/outage_rate.hpp"
#include "d2dcell/param_file.hpp"
#include "d2dcell/parallel_for.hpp"
#include "d2dcell/power_distributions.hpp"
#include "d2dcell/units.hpp"
#include "d2dcell/version.hpp"

namespace d2dcell {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool is_power_like(const std::string& parameter) {
  return parameter == "cutoff_threshold" || parameter == "sinr_threshold";
}

void apply_sweep_value(NetworkParams& params, const std::string& parameter, double value) {
  if (parameter == "bias") {
    params.bias = BiasFactor::finite(value);
  } else if (parameter == "cutoff_threshold") {
    params.cutoff_threshold = value;
  } else if (parameter == "sinr_threshold") {
    params.sinr_threshold = value;
  } else if (parameter == "bs_intensity") {
    params.bs_intensity = value;
  } else {
    throw std::invalid_argument("sweep: unsupported parameter '" + parameter + "'");
  }
}

void append_params_metadata(ResultTable& table, const NetworkParams& params) {
  std::istringstream lines(params_to_string(params));
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t eq = line.find('=');
    table.add_meta(line.substr(0, eq - 1), line.substr(eq + 2));
  }
}

struct MetricValues {
  std::vector<std::pair<std::string, double>> values;

  void push(const std::string& name, double v) { values.emplace_back(name, v); }
};

// All analytical metrics at one operating point. D2D-side metrics are
// not-applicable (nan) when the bias disables D2D entirely.
MetricValues evaluate_point(const NetworkParams& params, const QuadratureSpec& spec) {
  params.validate();
  const DerivedQuantities d = derive(params);
  const ModeSelectionResult sel = mode_selection_probability(params);
  const bool d2d_active = !params.bias.is_zero() && params.potential_d2d_intensity > 0.0;

  MetricValues out;
  out.push("d2d_mode_prob", sel.prob_d2d);
  out.push("d2d_link_intensity_per_m2", sel.d2d_link_intensity);
  out.push("d2d_survival_prob", d.d2d_survival_prob);
  out.push("truncation_d2d", 1.0 - d.d2d_survival_prob);
  out.push("truncation_cellular", d.cellular_truncation_prob);
  out.push("outage_cellular", cellular_outage(params, LtRoute::automatic, spec).outage_probability);
  out.push("outage_d2d", d2d_active ? d2d_outage(params, spec).outage_probability : kNan);
  out.push("capacity_cellular", link_capacity(LinkMode::cellular, params, spec));
  out.push("capacity_d2d", d2d_active ? link_capacity(LinkMode::d2d, params, spec) : kNan);
  out.push("potential_d2d_rate", potential_d2d_rate(params, spec));
  out.push("total_capacity", total_network_capacity(params, spec));
  const double mean_cell = cellular_power_moment(1.0, params, spec);
  out.push("mean_power_cellular", mean_cell);
  out.push("mean_power_cellular_dbm", units::watts_to_dbm(mean_cell));
  const double mean_d2d = d2d_active ? d2d_mode_power_moment(1.0, params) : kNan;
  out.push("mean_power_d2d", mean_d2d);
  out.push("mean_power_d2d_dbm", d2d_active ? units::watts_to_dbm(mean_d2d) : kNan);
  const double mean_pot = potential_d2d_mean_power(params, spec);
  out.push("mean_power_potential", mean_pot);
  out.push("mean_power_potential_dbm", units::watts_to_dbm(mean_pot));
  out.push("mode_selection_prob", sel.prob_d2d);
  return out;
}

std::vector<std::string> metric_names_cache() {
  NetworkParams defaults;
  const MetricValues v = evaluate_point(defaults, QuadratureSpec{});
  std::vector<std::string> names;
  names.reserve(v.values.size());
  for (const auto& [name, _] : v.values) names.push_back(name);
  return names;
}

}  // namespace

const std::vector<std::string>& sweep_metric_names() {
  static const std::vector<std::string> names = metric_names_cache();
  return names;
}

std::vector<double> SweepSpec::make_grid(double start, double stop, int count,
                                         GridSpacing spacing, const std::string& parameter) {
  if (count < 1) throw std::invalid_argument("sweep grid: count must be >= 1");
  if (count == 1 && start != stop) {
    throw std::invalid_argument("sweep grid: single-point grid needs start == stop");
  }
  if (spacing == GridSpacing::decibel && !is_power_like(parameter)) {
    throw std::invalid_argument("sweep grid: decibel spacing is only valid for power-like parameters");
  }
  if (spacing == GridSpacing::logarithmic && !(start > 0.0 && stop > 0.0)) {
    throw std::invalid_argument("sweep grid: logarithmic spacing needs positive endpoints");
  }
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    switch (spacing) {
      case GridSpacing::linear:
        grid[i] = start + frac * (stop - start);
        break;
      case GridSpacing::logarithmic:
        grid[i] = std::exp(std::log(start) + frac * (std::log(stop) - std::log(start)));
        break;
      case GridSpacing::decibel: {
        const double db = start + frac * (stop - start);
        // cutoff grids are stated in dBm, SINR-threshold grids in dB
        grid[i] = parameter == "cutoff_threshold" ? units::dbm_to_watts(db)
                                                  : units::db_to_linear(db);
        break;
      }
    }
  }
  return grid;
}

void SweepSpec::validate() const {
  static const std::set<std::string> known = {"bias", "cutoff_threshold", "sinr_threshold",
                                              "bs_intensity"};
  if (!known.count(parameter)) {
    throw std::invalid_argument("sweep: unsupported parameter '" + parameter + "'");
  }
  if (grid.empty()) throw std::invalid_argument("sweep: grid must be nonempty");
  const bool increasing = grid.size() < 2 || grid[1] > grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (increasing ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1])) {
      throw std::invalid_argument("sweep: grid must be strictly monotone");
    }
  }
  for (const auto& metric : metrics) {
    const auto& names = sweep_metric_names();
    if (std::find(names.begin(), names.end(), metric) == names.end()) {
      throw std::invalid_argument("sweep: unknown metric '" + metric + "'");
    }
  }
}

ResultTable analyze_table(const NetworkParams& params, const QuadratureSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  const MetricValues values = evaluate_point(params, spec);
  ResultTable table;
  table.add_meta("tool", std::string(kToolName) + " " + kToolVersion);
  table.add_meta("command", "analyze");
  append_params_metadata(table, params);
  std::vector<double> row;
  for (const auto& [name, value] : values.values) {
    table.columns.push_back(name);
    row.push_back(value);
  }
  table.rows.push_back(std::move(row));
  table.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return table;
}

ResultTable sweep_table(const NetworkParams& base, const SweepSpec& sweep,
                        const QuadratureSpec& spec, int num_threads) {
  const auto t0 = std::chrono::steady_clock::now();
  base.validate();
  sweep.validate();

  const std::vector<std::string>& all_names = sweep_metric_names();
  const std::vector<std::string> selected = sweep.metrics.empty() ? all_names : sweep.metrics;

  ResultTable table;
  table.add_meta("tool", std::string(kToolName) + " " + kToolVersion);
  table.add_meta("command", "sweep");
  table.add_meta("sweep_parameter", sweep.parameter);
  append_params_metadata(table, base);

  table.columns.push_back(sweep.parameter);
  const bool power_like = is_power_like(sweep.parameter);
  if (power_like) table.columns.push_back(sweep.parameter + "_db");
  for (const auto& name : selected) table.columns.push_back(name);
  table.columns.push_back("status");

  std::vector<std::vector<double>> rows(sweep.grid.size());
  parallel_for(sweep.grid.size(), num_threads, [&](std::size_t i) {
    const double value = sweep.grid[i];
    std::vector<double>& row = rows[i];
    row.push_back(value);
    if (power_like) {
      row.push_back(sweep.parameter == "cutoff_threshold" ? units::watts_to_dbm(value)
                                                          : units::linear_to_db(value));
    }
    double status = 0.0;
    std::vector<double> cells(selected.size(), kNan);
    try {
      NetworkParams point = base;
      apply_sweep_value(point, sweep.parameter, value);
      const MetricValues values = evaluate_point(point, spec);
      for (std::size_t m = 0; m < selected.size(); ++m) {
        for (const auto& [name, v] : values.values) {
          if (name == selected[m]) {
            cells[m] = v;
            break;
          }
        }
      }
    } catch (const std::invalid_argument&) {
      status = 2.0;
    } catch (const std::domain_error&) {
      status = 2.0;
    } catch (const ConvergenceError&) {
      status = 3.0;
    }
    row.insert(row.end(), cells.begin(), cells.end());
    row.push_back(status);
  });
  table.rows = std::move(rows);
  table.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return table;
}

ResultTable validation_table(const NetworkParams& params, const SimulationConfig& config,
                             std::span<const double> theta_grid, const QuadratureSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  params.validate();
  config.validate(params);
  if (theta_grid.empty()) throw std::invalid_argument("validation: theta grid must be nonempty");

  const CampaignResult campaign = run_campaign(params, config, theta_grid);

  ResultTable table;
  table.add_meta("tool", std::string(kToolName) + " " + kToolVersion);
  table.add_meta("command", "validate");
  append_params_metadata(table, params);
  table.add_meta("rng_seed", std::to_string(config.rng_seed));
  table.add_meta("num_realizations", std::to_string(config.num_realizations));
  table.add_meta("window_side_m", format_double(config.window_side_m));
  table.add_meta("guard_fraction", format_double(config.guard_fraction));
  table.add_meta("saturation_enabled", config.saturation_enabled ? "1" : "0");

  table.columns = {"theta",
                   "theta_db",
                   "outage_cellular_model",
                   "outage_cellular_sim",
                   "outage_cellular_sim_se",
                   "outage_cellular_gap",
                   "outage_d2d_model",
                   "outage_d2d_sim",
                   "outage_d2d_sim_se",
                   "outage_d2d_gap"};

  const bool d2d_active = !params.bias.is_zero() && params.potential_d2d_intensity > 0.0;
  for (std::size_t k = 0; k < campaign.theta_grid.size(); ++k) {
    NetworkParams point = params;
    point.sinr_threshold = campaign.theta_grid[k];
    const double model_cell = cellular_outage(point, LtRoute::automatic, spec).outage_probability;
    const double model_d2d = d2d_active ? d2d_outage(point, spec).outage_probability : kNan;
    const MetricStat& sim_cell = campaign.cellular_outage[k];
    const MetricStat& sim_d2d = campaign.d2d_outage[k];
    table.rows.push_back({point.sinr_threshold, units::linear_to_db(point.sinr_threshold),
                          model_cell, sim_cell.mean, sim_cell.std_error,
                          std::fabs(model_cell - sim_cell.mean), model_d2d, sim_d2d.mean,
                          sim_d2d.std_error,
                          d2d_active ? std::fabs(model_d2d - sim_d2d.mean) : kNan});
  }
  table.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return table;
}

}  // namespace d2dcell
