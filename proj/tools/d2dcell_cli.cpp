// Command-line front end: single-point analysis, Monte Carlo validation and
// parameter sweeps over the D2D-enabled uplink model.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2dcell/errors.hpp"
#include "d2dcell/network_params.hpp"
#include "d2dcell/param_file.hpp"
#include "d2dcell/result_table.hpp"
#include "d2dcell/simulation.hpp"
#include "d2dcell/sweep.hpp"
#include "d2dcell/units.hpp"
#include "d2dcell/version.hpp"

namespace {

// Exit codes: 0 ok, 2 parameter errors, 3 numerical-convergence errors,
// 4 I/O errors.
constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
  std::string params_path;
  std::vector<std::string> overrides;
  std::string format = "csv";
  std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--params", opts->params_path, "Parameter file (key = value [unit] lines)");
  cmd->add_option("--set", opts->overrides,
                  "Override one parameter, e.g. --set cutoff_threshold=-60dBm (repeatable)");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts->out_path, "Output path (default: stdout)");
}

d2dcell::NetworkParams resolve_params(const CommonOptions& opts) {
  d2dcell::NetworkParams params;
  if (!opts.params_path.empty()) {
    params = d2dcell::load_params_file(opts.params_path, params);
  }
  for (const std::string& entry : opts.overrides) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects KEY=VALUE, got '" + entry + "'");
    }
    d2dcell::apply_override(params, entry.substr(0, eq), entry.substr(eq + 1));
  }
  params.validate();
  return params;
}

void emit(const d2dcell::ResultTable& table, const CommonOptions& opts) {
  const auto format = opts.format == "json" ? d2dcell::TableFormat::json : d2dcell::TableFormat::csv;
  if (opts.out_path.empty()) {
    d2dcell::write_table(table, format, std::cout);
  } else {
    d2dcell::write_table_file(table, format, opts.out_path);
  }
  std::fprintf(stderr, "d2dcell: done in %.2f s\n", table.runtime_seconds);
}

// Renames the nats-based rate columns to bits and rescales the cells.
void convert_rates_to_bits(d2dcell::ResultTable* table) {
  static const std::vector<std::string> rate_columns = {"capacity_cellular", "capacity_d2d",
                                                        "potential_d2d_rate", "total_capacity"};
  const double scale = 1.0 / std::log(2.0);
  for (std::size_t c = 0; c < table->columns.size(); ++c) {
    bool is_rate = false;
    for (const auto& name : rate_columns) {
      if (table->columns[c] == name) is_rate = true;
    }
    if (!is_rate) continue;
    table->columns[c] += "_bits";
    for (auto& row : table->rows) row[c] *= scale;
  }
  table->add_meta("rate_unit", "bits/s/Hz");
}

std::vector<double> theta_grid_from_db(double min_db, double max_db, double step_db) {
  if (!(step_db > 0.0) || max_db < min_db) {
    throw std::invalid_argument("theta grid: need min <= max and step > 0");
  }
  std::vector<double> grid;
  for (double db = min_db; db <= max_db + 1e-9; db += step_db) {
    grid.push_back(d2dcell::units::db_to_linear(db));
  }
  return grid;
}

int run(int argc, char** argv) {
  CLI::App app{std::string(d2dcell::kToolName) + " " + d2dcell::kToolVersion +
               " - D2D-enabled uplink cellular network analysis"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "All analytical metrics at one operating point");
  CommonOptions analyze_opts;
  add_common_options(analyze, &analyze_opts);
  bool analyze_bits = false;
  analyze->add_flag("--bits", analyze_bits, "Report rates in bits/s/Hz instead of nats/s/Hz");

  // validate
  auto* validate = app.add_subcommand("validate", "Analytical vs Monte Carlo outage, side by side");
  CommonOptions validate_opts;
  add_common_options(validate, &validate_opts);
  std::uint64_t seed = 1;
  int realizations = 10000;
  double window_km2 = 100.0;
  double guard = 0.2;
  int threads = 0;
  bool no_saturation = false;
  double theta_min_db = -10.0, theta_max_db = 20.0, theta_step_db = 2.0;
  std::string dump_path;
  validate->add_option("--seed", seed, "RNG seed");
  validate->add_option("--realizations", realizations, "Number of independent realizations");
  validate->add_option("--window-km2", window_km2, "Simulation window area in km^2");
  validate->add_option("--guard", guard, "Guard-ring fraction of the window side, in [0, 0.5)");
  validate->add_option("--threads", threads, "Worker threads (0 = hardware)");
  validate->add_flag("--no-saturation", no_saturation, "Skip the idle-BS fill-in step");
  validate->add_option("--theta-db-min", theta_min_db, "SINR threshold grid start (dB)");
  validate->add_option("--theta-db-max", theta_max_db, "SINR threshold grid stop (dB)");
  validate->add_option("--theta-db-step", theta_step_db, "SINR threshold grid step (dB)");
  validate->add_option("--dump-realization", dump_path,
                       "Write the per-UE dump of realization 0 to this path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Analytical metrics over a parameter grid");
  CommonOptions sweep_opts;
  add_common_options(sweep, &sweep_opts);
  std::string sweep_param;
  std::string grid_spec;
  std::string grid_values;
  std::string metrics_csv;
  int sweep_threads = 0;
  bool sweep_bits = false;
  sweep->add_option("--param", sweep_param, "bias | cutoff_threshold | sinr_threshold | bs_intensity")
      ->required();
  sweep->add_option("--grid", grid_spec,
                    "start:stop:count:spacing with spacing linear|log|db "
                    "(db grids are dBm for cutoff_threshold, dB for sinr_threshold)");
  sweep->add_option("--grid-values", grid_values, "Explicit comma-separated grid values");
  sweep->add_option("--metrics", metrics_csv, "Comma-separated metric subset (default: all)");
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = hardware)");
  sweep->add_flag("--bits", sweep_bits, "Report rates in bits/s/Hz instead of nats/s/Hz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParam;
  }

  if (analyze->parsed()) {
    const d2dcell::NetworkParams params = resolve_params(analyze_opts);
    d2dcell::ResultTable table = d2dcell::analyze_table(params);
    if (analyze_bits) convert_rates_to_bits(&table);
    emit(table, analyze_opts);
    return kExitOk;
  }

  if (validate->parsed()) {
    const d2dcell::NetworkParams params = resolve_params(validate_opts);
    d2dcell::SimulationConfig config;
    config.rng_seed = seed;
    config.num_realizations = realizations;
    config.window_side_m = std::sqrt(d2dcell::units::km2_to_m2(window_km2));
    config.guard_fraction = guard;
    config.num_threads = threads;
    config.saturation_enabled = !no_saturation;
    const std::vector<double> grid = theta_grid_from_db(theta_min_db, theta_max_db, theta_step_db);
    if (!dump_path.empty()) {
      d2dcell::Realization realization = d2dcell::realize_network(params, config, 0);
      d2dcell::classify_and_schedule(realization, params);
      std::ofstream dump(dump_path);
      if (!dump) throw d2dcell::IoError("cannot open dump file '" + dump_path + "'");
      d2dcell::write_realization_dump(realization, params, config, dump);
    }
    const d2dcell::ResultTable table = d2dcell::validation_table(params, config, grid);
    emit(table, validate_opts);
    return kExitOk;
  }

  // sweep
  const d2dcell::NetworkParams params = resolve_params(sweep_opts);
  d2dcell::SweepSpec spec;
  spec.parameter = sweep_param;
  if (grid_spec.empty() == grid_values.empty()) {
    throw std::invalid_argument("sweep: give exactly one of --grid or --grid-values");
  }
  if (!grid_values.empty()) {
    std::stringstream ss(grid_values);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.grid.push_back(std::stod(tok));
  } else {
    std::stringstream ss(grid_spec);
    std::string start_s, stop_s, count_s, spacing_s;
    if (!std::getline(ss, start_s, ':') || !std::getline(ss, stop_s, ':') ||
        !std::getline(ss, count_s, ':') || !std::getline(ss, spacing_s)) {
      throw std::invalid_argument("sweep: --grid expects start:stop:count:spacing");
    }
    d2dcell::GridSpacing spacing;
    if (spacing_s == "linear") {
      spacing = d2dcell::GridSpacing::linear;
    } else if (spacing_s == "log") {
      spacing = d2dcell::GridSpacing::logarithmic;
    } else if (spacing_s == "db") {
      spacing = d2dcell::GridSpacing::decibel;
    } else {
      throw std::invalid_argument("sweep: spacing must be linear, log or db");
    }
    spec.grid = d2dcell::SweepSpec::make_grid(std::stod(start_s), std::stod(stop_s),
                                              std::stoi(count_s), spacing, sweep_param);
  }
  if (!metrics_csv.empty()) {
    std::stringstream ss(metrics_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.metrics.push_back(tok);
  }
  d2dcell::ResultTable table = d2dcell::sweep_table(params, spec, {}, sweep_threads);
  if (sweep_bits) convert_rates_to_bits(&table);
  emit(table, sweep_opts);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const d2dcell::ConvergenceError& e) {
    std::fprintf(stderr, "d2dcell: numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const d2dcell::SaturationError& e) {
    std::fprintf(stderr, "d2dcell: numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const d2dcell::IoError& e) {
    std::fprintf(stderr, "d2dcell: i/o error: %s\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "d2dcell: parameter error: %s\n", e.what());
    return kExitParam;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "d2dcell: parameter error: %s\n", e.what());
    return kExitParam;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "d2dcell: error: %s\n", e.what());
    return 1;
  }
}
