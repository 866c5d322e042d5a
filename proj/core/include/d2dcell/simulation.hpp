#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "d2dcell/network_params.hpp"

namespace d2dcell {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct SimulationConfig {
  double window_side_m = 10000.0;  // 100 km^2 desk-scale window
  double guard_fraction = 0.2;     // border fraction excluded from measurement
  int num_realizations = 10000;
  std::uint64_t rng_seed = 1;
  bool saturation_enabled = true;  // fill idle BSs with extra uplink users
  int num_threads = 0;             // 0 = hardware concurrency
  std::vector<double> lt_probe_s;  // optional: E[exp(-s I)] probe grid

  // Throws std::invalid_argument; warns to stderr when the window is small
  // enough that fewer than 50 BSs are expected.
  void validate(const NetworkParams& params) const;
};

enum class TxMode : unsigned char { none, cellular, d2d };

struct UeRecord {
  Vec2 pos;
  bool potential = false;  // intended receiver within the sensitivity range
  Vec2 rx_pos;             // D2D receiver position (when potential)
  double d2d_dist = 0.0;   // transmitter-receiver distance
  int nearest_bs = -1;
  double bs_dist = 0.0;        // distance to nearest BS
  bool d2d_truncated = false;  // potential, but inversion would exceed max power
  bool covered = false;        // cellular inversion feasible
  bool bias_criterion = false; // biased D2D link quality beats the uplink
  int case_label = 0;          // 1..4 taxonomy, 0 before classification
  TxMode mode = TxMode::none;
  double tx_power_w = 0.0;
  bool scheduled = false;
  bool inserted = false;  // added by the saturation fill-in
};

struct Realization {
  std::vector<Vec2> bs;
  std::vector<UeRecord> ues;
  std::vector<int> serving_ue;  // per BS: scheduled cellular UE index, -1 if idle
  double window_side_m = 0.0;
  std::uint64_t rng_seed = 0;
  std::uint64_t stream_index = 0;
  bool saturation_enabled = true;
  bool scheduled = false;
};

// Samples the spatial model: Poisson BS and UE point patterns in the window,
// independent potential-D2D marks with probability D/U, receivers uniform in
// the sensitivity-limited disk. Deterministic given (rng_seed, stream_index).
Realization realize_network(const NetworkParams& params, const SimulationConfig& config,
                            std::uint64_t stream_index);

// Fills case labels, modes, powers and the schedule: one cellular uplink per
// cell on the probe channel, D2D transmitters always scheduled, and (when
// enabled) saturation insertion until every BS serves a cellular uplink.
void classify_and_schedule(Realization& realization, const NetworkParams& params);

// Raw per-realization tallies. Fractions and means are formed per
// realization; the campaign aggregates across realizations.
struct SampleMetrics {
  // per-theta outage tallies over measured receivers
  std::vector<std::uint32_t> cellular_outage_count;
  std::vector<std::uint32_t> d2d_outage_count;
  std::uint32_t cellular_rx_count = 0;
  std::uint32_t d2d_rx_count = 0;
  double sum_log_rate_cellular = 0.0;
  double sum_log_rate_d2d = 0.0;

  // population tallies over organic (non-inserted) UEs in the inner window
  std::uint32_t ue_count = 0;
  std::uint32_t uncovered_count = 0;          // cellular truncation
  std::uint32_t flagged_potential_count = 0;  // receiver within sensitivity range
  std::uint32_t d2d_truncated_count = 0;      // flagged but cutoff-truncated
  std::uint32_t active_potential_count = 0;   // flagged and surviving truncation
  std::uint32_t bias_criterion_count = 0;     // of those, biased rule holds
  std::uint32_t d2d_mode_count = 0;
  std::uint32_t case_count[4] = {0, 0, 0, 0};

  double sum_power_potential = 0.0;  // assigned mode power over active potential UEs
  double sum_power_d2d_mode = 0.0;
  std::uint32_t d2d_mode_power_count = 0;
  double sum_power_cellular_candidates = 0.0;  // cellular-mode UEs, scheduled or not
  double sum_sqrt_power_cellular_candidates = 0.0;
  std::uint32_t cellular_candidate_count = 0;
  double sum_power_scheduled_cellular = 0.0;
  std::uint32_t scheduled_cellular_count = 0;

  // optional E[exp(-s I)] probes, one accumulator per s in lt_probe_s
  std::vector<double> lt_dd_sum, lt_cd_sum, lt_cc_sum, lt_dc_sum;
};

// Draws fading, computes per-receiver SINR in the inner window and tallies
// outage against every threshold in theta_grid (falls back to
// params.sinr_threshold when the grid is empty). Deterministic.
SampleMetrics measure(const Realization& realization, const NetworkParams& params,
                      const SimulationConfig& config, std::span<const double> theta_grid);

struct MetricStat {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t count = 0;  // realizations contributing
};

struct CampaignResult {
  std::vector<double> theta_grid;
  std::vector<MetricStat> cellular_outage;  // per theta
  std::vector<MetricStat> d2d_outage;       // per theta

  MetricStat cellular_truncation;
  MetricStat d2d_truncation;
  MetricStat mode_selection_fraction;  // biased rule holds among active potential UEs
  MetricStat d2d_mode_fraction;        // realized D2D-mode fraction (incl. forced)
  MetricStat mean_power_potential;
  MetricStat mean_power_d2d_mode;
  MetricStat mean_power_cellular;       // per-UE over cellular-mode UEs
  MetricStat mean_sqrt_power_cellular;  // E[sqrt(P)] analogue
  MetricStat mean_power_scheduled_cellular;
  MetricStat mean_log_rate_cellular;  // E[ln(1+SINR)]
  MetricStat mean_log_rate_d2d;

  std::vector<MetricStat> lt_dd, lt_cd, lt_cc, lt_dc;  // per probe s
  std::uint64_t realizations = 0;
};

// Independent realizations (realize -> classify/schedule -> measure), run
// concurrently on deterministic substreams and reduced in index order.
CampaignResult run_campaign(const NetworkParams& params, const SimulationConfig& config,
                            std::span<const double> theta_grid);

// Columnar per-UE dump with a header row: x, y, case, mode, tx_power_w,
// sinr_linear, scheduled. SINR is recomputed with the realization's own
// fading stream; unscheduled UEs carry nan.
void write_realization_dump(const Realization& realization, const NetworkParams& params,
                            const SimulationConfig& config, std::ostream& out);

}  // namespace d2dcell
