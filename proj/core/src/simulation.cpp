#include "d2dcell/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "d2dcell/errors.hpp"
#include "d2dcell/parallel_for.hpp"
#include "d2dcell/rng.hpp"

namespace d2dcell {

namespace {

constexpr std::uint64_t kPhaseBs = 1;
constexpr std::uint64_t kPhaseUe = 2;
constexpr std::uint64_t kPhaseReceiver = 3;
constexpr std::uint64_t kPhaseSchedule = 4;
constexpr std::uint64_t kPhaseSaturation = 5;
constexpr std::uint64_t kPhaseFading = 6;
constexpr std::uint64_t kPhaseChannel = 7;

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double v) { return v * v; }

double dist2(const Vec2& a, const Vec2& b) { return sq(a.x - b.x) + sq(a.y - b.y); }

// Inverse power-law path loss on a squared distance, with a fast path for the
// ubiquitous exponent 4.
double pathloss(double d2, double half_eta) {
  if (half_eta == 2.0) return 1.0 / (d2 * d2);
  return std::pow(d2, -half_eta);
}

// Uniform-grid spatial index for nearest-BS queries.
class BsIndex {
 public:
  BsIndex(const std::vector<Vec2>& pts, double window) : pts_(&pts), window_(window) {
    ncells_ = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(pts.size()) / 2.0)));
    cell_size_ = window_ / ncells_;
    cells_.resize(static_cast<std::size_t>(ncells_) * ncells_);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      cells_[cell_of(pts[i])].push_back(i);
    }
  }

  // Index of the nearest point and its distance; {-1, inf} when empty.
  std::pair<int, double> nearest(const Vec2& q) const {
    if (pts_->empty()) return {-1, kInf};
    const int cx = coord(q.x);
    const int cy = coord(q.y);
    int best = -1;
    double best_d2 = kInf;
    for (int ring = 0; ring < 2 * ncells_; ++ring) {
      bool any_cell = false;
      for (int dx = -ring; dx <= ring; ++dx) {
        const int x = cx + dx;
        if (x < 0 || x >= ncells_) continue;
        const bool edge_col = (dx == -ring || dx == ring);
        for (int dy = -ring; dy <= ring; ++dy) {
          if (!edge_col && dy != -ring && dy != ring) continue;  // ring boundary only
          const int y = cy + dy;
          if (y < 0 || y >= ncells_) continue;
          any_cell = true;
          for (const int i : cells_[static_cast<std::size_t>(x) * ncells_ + y]) {
            const double d2 = dist2((*pts_)[i], q);
            if (d2 < best_d2) {
              best_d2 = d2;
              best = i;
            }
          }
        }
      }
      // Cells at Chebyshev ring r+1 hold no point closer than r*cell_size.
      if (best >= 0 && std::sqrt(best_d2) <= ring * cell_size_) break;
      if (!any_cell && ring >= ncells_) break;
    }
    return {best, std::sqrt(best_d2)};
  }

 private:
  int coord(double v) const {
    return std::clamp(static_cast<int>(v / cell_size_), 0, ncells_ - 1);
  }
  std::size_t cell_of(const Vec2& p) const {
    return static_cast<std::size_t>(coord(p.x)) * ncells_ + coord(p.y);
  }

  const std::vector<Vec2>* pts_;
  double window_;
  int ncells_ = 1;
  double cell_size_ = 0.0;
  std::vector<std::vector<int>> cells_;
};

struct Transmitter {
  Vec2 pos;
  double power = 0.0;
  bool d2d = false;
  int ue_index = -1;
};

struct Receiver {
  Vec2 pos;
  int own_ue = -1;
  bool d2d = false;
};

bool in_inner_window(const Vec2& p, double window, double guard) {
  const double lo = guard * window;
  const double hi = (1.0 - guard) * window;
  return p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi;
}

}  // namespace

void SimulationConfig::validate(const NetworkParams& params) const {
  if (!(window_side_m > 0.0) || !std::isfinite(window_side_m)) {
    throw std::invalid_argument("simulation config: window_side_m must be > 0");
  }
  if (!(guard_fraction >= 0.0 && guard_fraction < 0.5)) {
    throw std::invalid_argument("simulation config: guard_fraction must be in [0, 0.5)");
  }
  if (num_realizations < 1) {
    throw std::invalid_argument("simulation config: num_realizations must be >= 1");
  }
  for (const double s : lt_probe_s) {
    if (!(s >= 0.0)) throw std::invalid_argument("simulation config: lt_probe_s values must be >= 0");
  }
  const double expected_bs = params.bs_intensity * window_side_m * window_side_m;
  if (expected_bs < 50.0) {
    std::fprintf(stderr, "d2dcell: warning: window holds only %.1f expected BSs (< 50); edge effects may dominate\n",
                 expected_bs);
  }
}

Realization realize_network(const NetworkParams& params, const SimulationConfig& config,
                            std::uint64_t stream_index) {
  params.validate();
  config.validate(params);

  Realization r;
  r.window_side_m = config.window_side_m;
  r.rng_seed = config.rng_seed;
  r.stream_index = stream_index;
  r.saturation_enabled = config.saturation_enabled;
  const double w = config.window_side_m;
  const double area = w * w;

  {
    auto rng = make_stream_rng(config.rng_seed, stream_index, kPhaseBs);
    std::poisson_distribution<int> count(params.bs_intensity * area);
    std::uniform_real_distribution<double> coord(0.0, w);
    const int n = count(rng);
    r.bs.resize(n);
    for (auto& b : r.bs) {
      b.x = coord(rng);
      b.y = coord(rng);
    }
  }

  {
    auto rng = make_stream_rng(config.rng_seed, stream_index, kPhaseUe);
    std::poisson_distribution<int> count(params.ue_intensity * area);
    std::uniform_real_distribution<double> coord(0.0, w);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double potential_fraction = params.potential_d2d_intensity / params.ue_intensity;
    const int n = count(rng);
    r.ues.resize(n);
    for (auto& ue : r.ues) {
      ue.pos.x = coord(rng);
      ue.pos.y = coord(rng);
      ue.potential = unit(rng) < potential_fraction;
    }
  }

  {
    // Intended receivers, uniform in the sensitivity-limited disk. Receivers
    // of edge transmitters may fall outside the window; they are kept.
    auto rng = make_stream_rng(config.rng_seed, stream_index, kPhaseReceiver);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r_max =
        std::pow(params.max_tx_power / params.receiver_sensitivity, 1.0 / params.pathloss_d2d);
    for (auto& ue : r.ues) {
      if (!ue.potential) continue;
      const double angle = 2.0 * 3.14159265358979323846 * unit(rng);
      const double radius = r_max * std::sqrt(unit(rng));
      ue.d2d_dist = radius;
      ue.rx_pos.x = ue.pos.x + radius * std::cos(angle);
      ue.rx_pos.y = ue.pos.y + radius * std::sin(angle);
    }
  }

  const BsIndex index(r.bs, w);
  for (auto& ue : r.ues) {
    const auto [bs, dist] = index.nearest(ue.pos);
    ue.nearest_bs = bs;
    ue.bs_dist = dist;
  }
  return r;
}

void classify_and_schedule(Realization& r, const NetworkParams& params) {
  params.validate();
  const double eta_c = params.pathloss_cellular;
  const double eta_d = params.pathloss_d2d;
  const double rho = params.cutoff_threshold;
  const double cutoff_range = std::pow(params.max_tx_power / rho, 1.0 / eta_d);
  const double coverage_range = std::pow(params.max_tx_power / rho, 1.0 / eta_c);

  for (auto& ue : r.ues) {
    ue.covered = ue.nearest_bs >= 0 && ue.bs_dist <= coverage_range;
    bool active_potential = false;
    if (ue.potential) {
      ue.d2d_truncated = ue.d2d_dist > cutoff_range;
      active_potential = !ue.d2d_truncated;
    }
    ue.case_label = active_potential ? (ue.covered ? 4 : 3) : (ue.covered ? 2 : 1);

    if (active_potential) {
      if (params.bias.is_infinite()) {
        ue.bias_criterion = true;
      } else if (params.bias.is_zero()) {
        ue.bias_criterion = false;
      } else {
        ue.bias_criterion = params.bias.value() * std::pow(ue.d2d_dist, -eta_d) >=
                            std::pow(ue.bs_dist, -eta_c);
      }
    }

    switch (ue.case_label) {
      case 1:
        ue.mode = TxMode::none;
        break;
      case 2:
        ue.mode = TxMode::cellular;
        break;
      case 3:
        // no cellular option; D2D unless the zero bias disables D2D entirely
        ue.mode = params.bias.is_zero() ? TxMode::none : TxMode::d2d;
        break;
      case 4:
        ue.mode = ue.bias_criterion ? TxMode::d2d : TxMode::cellular;
        break;
    }
    if (ue.mode == TxMode::d2d) {
      ue.tx_power_w = rho * std::pow(ue.d2d_dist, eta_d);
      ue.scheduled = true;  // D2D transmitters are always scheduled
    } else if (ue.mode == TxMode::cellular) {
      ue.tx_power_w = rho * std::pow(ue.bs_dist, eta_c);
      ue.scheduled = false;
    } else {
      ue.tx_power_w = 0.0;
      ue.scheduled = false;
    }
  }

  // One cellular uplink per cell on the probe channel, picked uniformly among
  // the cell's candidates.
  r.serving_ue.assign(r.bs.size(), -1);
  std::vector<std::vector<int>> candidates(r.bs.size());
  for (int i = 0; i < static_cast<int>(r.ues.size()); ++i) {
    const auto& ue = r.ues[i];
    if (ue.mode == TxMode::cellular && ue.nearest_bs >= 0) {
      candidates[ue.nearest_bs].push_back(i);
    }
  }
  auto sched_rng = make_stream_rng(r.rng_seed, r.stream_index, kPhaseSchedule);
  for (std::size_t b = 0; b < r.bs.size(); ++b) {
    if (candidates[b].empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates[b].size() - 1);
    const int chosen = candidates[b][pick(sched_rng)];
    r.ues[chosen].scheduled = true;
    r.serving_ue[b] = chosen;
  }

  // Saturation: give every idle BS one uplink user. Equivalent in law to
  // inserting uniform points over the window and keeping those that activate
  // an idle BS: per idle BS the accepted point is uniform over the part of
  // its inversion disk it actually covers.
  if (r.saturation_enabled && !r.bs.empty()) {
    const BsIndex index(r.bs, r.window_side_m);
    auto sat_rng = make_stream_rng(r.rng_seed, r.stream_index, kPhaseSaturation);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr int kMaxTries = 200000;
    for (std::size_t b = 0; b < r.bs.size(); ++b) {
      if (r.serving_ue[b] >= 0) continue;
      bool placed = false;
      for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        const double angle = 2.0 * 3.14159265358979323846 * unit(sat_rng);
        const double radius = coverage_range * std::sqrt(unit(sat_rng));
        Vec2 p{r.bs[b].x + radius * std::cos(angle), r.bs[b].y + radius * std::sin(angle)};
        if (p.x < 0.0 || p.x > r.window_side_m || p.y < 0.0 || p.y > r.window_side_m) continue;
        const auto [nearest, dist] = index.nearest(p);
        if (nearest != static_cast<int>(b)) continue;
        UeRecord ue;
        ue.pos = p;
        ue.nearest_bs = nearest;
        ue.bs_dist = dist;
        ue.covered = true;
        ue.case_label = 2;
        ue.mode = TxMode::cellular;
        ue.tx_power_w = rho * std::pow(dist, eta_c);
        ue.scheduled = true;
        ue.inserted = true;
        r.ues.push_back(ue);
        r.serving_ue[b] = static_cast<int>(r.ues.size()) - 1;
        placed = true;
        break;
      }
      if (!placed) {
        throw SaturationError("classify_and_schedule: could not activate an idle BS (degenerate geometry?)");
      }
    }
  }
  r.scheduled = true;
}

namespace {

// Shared SINR evaluation for measurement and dumps. When per_ue_sinr is given
// every scheduled link is evaluated (window-wide) and written there; when
// collecting metrics only inner-window receivers count.
void evaluate_links(const Realization& r, const NetworkParams& params,
                    const SimulationConfig& config, std::span<const double> theta_grid,
                    SampleMetrics* metrics, std::vector<double>* per_ue_sinr) {
  const double half_eta_c = params.pathloss_cellular / 2.0;
  const double half_eta_d = params.pathloss_d2d / 2.0;
  const double rho = params.cutoff_threshold;
  const double noise = params.noise_power;
  const double window = r.window_side_m;
  const double guard = config.guard_fraction;
  const bool all_receivers = per_ue_sinr != nullptr;

  std::vector<Transmitter> txs;
  txs.reserve(r.ues.size() / 4);
  auto chan_rng = make_stream_rng(r.rng_seed, r.stream_index, kPhaseChannel);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < static_cast<int>(r.ues.size()); ++i) {
    const auto& ue = r.ues[i];
    if (!ue.scheduled) continue;
    if (ue.mode == TxMode::d2d && params.num_channels > 1) {
      // D2D transmitters spread uniformly over the channels; keep the probe
      // channel's share.
      if (unit(chan_rng) >= 1.0 / params.num_channels) continue;
    }
    txs.push_back({ue.pos, ue.tx_power_w, ue.mode == TxMode::d2d, i});
  }

  std::vector<Receiver> receivers;
  for (std::size_t b = 0; b < r.serving_ue.size(); ++b) {
    if (r.serving_ue[b] < 0) continue;
    if (!all_receivers && !in_inner_window(r.bs[b], window, guard)) continue;
    receivers.push_back({r.bs[b], r.serving_ue[b], false});
  }
  for (const auto& tx : txs) {
    if (!tx.d2d) continue;
    const auto& ue = r.ues[tx.ue_index];
    if (!all_receivers && !in_inner_window(ue.rx_pos, window, guard)) continue;
    receivers.push_back({ue.rx_pos, tx.ue_index, true});
  }

  const std::size_t n_probe = config.lt_probe_s.size();
  if (metrics) {
    metrics->cellular_outage_count.assign(theta_grid.size(), 0);
    metrics->d2d_outage_count.assign(theta_grid.size(), 0);
    metrics->lt_dd_sum.assign(n_probe, 0.0);
    metrics->lt_cd_sum.assign(n_probe, 0.0);
    metrics->lt_cc_sum.assign(n_probe, 0.0);
    metrics->lt_dc_sum.assign(n_probe, 0.0);
  }

  auto fading_rng = make_stream_rng(r.rng_seed, r.stream_index, kPhaseFading);
  std::exponential_distribution<double> fading(1.0);

  for (const auto& rx : receivers) {
    const double half_eta = rx.d2d ? half_eta_d : half_eta_c;
    double interference_cellular = 0.0;
    double interference_d2d = 0.0;
    for (const auto& tx : txs) {
      if (tx.ue_index == rx.own_ue) continue;
      const double gain = fading(fading_rng);
      const double contribution = tx.power * gain * pathloss(dist2(tx.pos, rx.pos), half_eta);
      if (tx.d2d) {
        interference_d2d += contribution;
      } else {
        interference_cellular += contribution;
      }
    }
    const double own_gain = fading(fading_rng);
    const double sinr = rho * own_gain / (noise + interference_cellular + interference_d2d);

    if (per_ue_sinr) (*per_ue_sinr)[rx.own_ue] = sinr;
    if (!metrics) continue;

    if (rx.d2d) {
      metrics->d2d_rx_count += 1;
      metrics->sum_log_rate_d2d += std::log1p(sinr);
      for (std::size_t k = 0; k < theta_grid.size(); ++k) {
        metrics->d2d_outage_count[k] += sinr <= theta_grid[k] ? 1 : 0;
      }
      for (std::size_t k = 0; k < n_probe; ++k) {
        metrics->lt_cd_sum[k] += std::exp(-config.lt_probe_s[k] * interference_cellular);
        metrics->lt_dd_sum[k] += std::exp(-config.lt_probe_s[k] * interference_d2d);
      }
    } else {
      metrics->cellular_rx_count += 1;
      metrics->sum_log_rate_cellular += std::log1p(sinr);
      for (std::size_t k = 0; k < theta_grid.size(); ++k) {
        metrics->cellular_outage_count[k] += sinr <= theta_grid[k] ? 1 : 0;
      }
      for (std::size_t k = 0; k < n_probe; ++k) {
        metrics->lt_cc_sum[k] += std::exp(-config.lt_probe_s[k] * interference_cellular);
        metrics->lt_dc_sum[k] += std::exp(-config.lt_probe_s[k] * interference_d2d);
      }
    }
  }
}

}  // namespace

SampleMetrics measure(const Realization& r, const NetworkParams& params,
                      const SimulationConfig& config, std::span<const double> theta_grid) {
  if (!r.scheduled) throw std::logic_error("measure: realization has not been scheduled");
  params.validate();

  std::vector<double> fallback;
  if (theta_grid.empty()) {
    fallback.push_back(params.sinr_threshold);
    theta_grid = fallback;
  }

  SampleMetrics m;
  evaluate_links(r, params, config, theta_grid, &m, nullptr);

  const double window = r.window_side_m;
  const double guard = config.guard_fraction;
  for (const auto& ue : r.ues) {
    if (ue.inserted) continue;
    if (!in_inner_window(ue.pos, window, guard)) continue;
    m.ue_count += 1;
    if (!ue.covered) m.uncovered_count += 1;
    if (ue.case_label >= 1 && ue.case_label <= 4) m.case_count[ue.case_label - 1] += 1;
    if (ue.potential) {
      m.flagged_potential_count += 1;
      if (ue.d2d_truncated) {
        m.d2d_truncated_count += 1;
      } else {
        m.active_potential_count += 1;
        if (ue.bias_criterion) m.bias_criterion_count += 1;
        if (ue.mode == TxMode::d2d) m.d2d_mode_count += 1;
        m.sum_power_potential += ue.tx_power_w;
      }
    }
    if (ue.mode == TxMode::d2d) {
      m.sum_power_d2d_mode += ue.tx_power_w;
      m.d2d_mode_power_count += 1;
    } else if (ue.mode == TxMode::cellular) {
      m.sum_power_cellular_candidates += ue.tx_power_w;
      m.sum_sqrt_power_cellular_candidates += std::sqrt(ue.tx_power_w);
      m.cellular_candidate_count += 1;
      if (ue.scheduled) {
        m.sum_power_scheduled_cellular += ue.tx_power_w;
        m.scheduled_cellular_count += 1;
      }
    }
  }
  return m;
}

namespace {

MetricStat stat_from(const std::vector<double>& values) {
  MetricStat s;
  s.count = values.size();
  if (values.empty()) {
    s.mean = std::numeric_limits<double>::quiet_NaN();
    s.std_error = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / values.size();
  if (values.size() == 1) {
    s.std_error = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double ss = 0.0;
  for (const double v : values) ss += sq(v - s.mean);
  s.std_error = std::sqrt(ss / (values.size() - 1.0) / values.size());
  return s;
}

template <typename Num, typename Den>
MetricStat ratio_stat(const std::vector<SampleMetrics>& all, Num num, Den den) {
  std::vector<double> values;
  values.reserve(all.size());
  for (const auto& m : all) {
    const double d = den(m);
    if (d > 0.0) values.push_back(num(m) / d);
  }
  return stat_from(values);
}

}  // namespace

CampaignResult run_campaign(const NetworkParams& params, const SimulationConfig& config,
                            std::span<const double> theta_grid) {
  params.validate();
  config.validate(params);

  std::vector<double> thetas(theta_grid.begin(), theta_grid.end());
  if (thetas.empty()) thetas.push_back(params.sinr_threshold);

  const std::size_t n = static_cast<std::size_t>(config.num_realizations);
  std::vector<SampleMetrics> all(n);
  parallel_for(n, config.num_threads, [&](std::size_t i) {
    Realization r = realize_network(params, config, i);
    classify_and_schedule(r, params);
    all[i] = measure(r, params, config, thetas);
  });

  CampaignResult res;
  res.theta_grid = thetas;
  res.realizations = n;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    res.cellular_outage.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return static_cast<double>(m.cellular_outage_count[k]); },
        [](const SampleMetrics& m) { return static_cast<double>(m.cellular_rx_count); }));
    res.d2d_outage.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return static_cast<double>(m.d2d_outage_count[k]); },
        [](const SampleMetrics& m) { return static_cast<double>(m.d2d_rx_count); }));
  }
  res.cellular_truncation = ratio_stat(
      all, [](const SampleMetrics& m) { return static_cast<double>(m.uncovered_count); },
      [](const SampleMetrics& m) { return static_cast<double>(m.ue_count); });
  res.d2d_truncation = ratio_stat(
      all, [](const SampleMetrics& m) { return static_cast<double>(m.d2d_truncated_count); },
      [](const SampleMetrics& m) { return static_cast<double>(m.flagged_potential_count); });
  res.mode_selection_fraction = ratio_stat(
      all, [](const SampleMetrics& m) { return static_cast<double>(m.bias_criterion_count); },
      [](const SampleMetrics& m) { return static_cast<double>(m.active_potential_count); });
  res.d2d_mode_fraction = ratio_stat(
      all, [](const SampleMetrics& m) { return static_cast<double>(m.d2d_mode_count); },
      [](const SampleMetrics& m) { return static_cast<double>(m.active_potential_count); });
  res.mean_power_potential = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_power_potential; },
      [](const SampleMetrics& m) { return static_cast<double>(m.active_potential_count); });
  res.mean_power_d2d_mode = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_power_d2d_mode; },
      [](const SampleMetrics& m) { return static_cast<double>(m.d2d_mode_power_count); });
  res.mean_power_cellular = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_power_cellular_candidates; },
      [](const SampleMetrics& m) { return static_cast<double>(m.cellular_candidate_count); });
  res.mean_sqrt_power_cellular = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_sqrt_power_cellular_candidates; },
      [](const SampleMetrics& m) { return static_cast<double>(m.cellular_candidate_count); });
  res.mean_power_scheduled_cellular = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_power_scheduled_cellular; },
      [](const SampleMetrics& m) { return static_cast<double>(m.scheduled_cellular_count); });
  res.mean_log_rate_cellular = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_log_rate_cellular; },
      [](const SampleMetrics& m) { return static_cast<double>(m.cellular_rx_count); });
  res.mean_log_rate_d2d = ratio_stat(
      all, [](const SampleMetrics& m) { return m.sum_log_rate_d2d; },
      [](const SampleMetrics& m) { return static_cast<double>(m.d2d_rx_count); });

  for (std::size_t k = 0; k < config.lt_probe_s.size(); ++k) {
    res.lt_dd.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return m.lt_dd_sum[k]; },
        [](const SampleMetrics& m) { return static_cast<double>(m.d2d_rx_count); }));
    res.lt_cd.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return m.lt_cd_sum[k]; },
        [](const SampleMetrics& m) { return static_cast<double>(m.d2d_rx_count); }));
    res.lt_cc.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return m.lt_cc_sum[k]; },
        [](const SampleMetrics& m) { return static_cast<double>(m.cellular_rx_count); }));
    res.lt_dc.push_back(ratio_stat(
        all, [k](const SampleMetrics& m) { return m.lt_dc_sum[k]; },
        [](const SampleMetrics& m) { return static_cast<double>(m.cellular_rx_count); }));
  }
  return res;
}

void write_realization_dump(const Realization& r, const NetworkParams& params,
                            const SimulationConfig& config, std::ostream& out) {
  if (!r.scheduled) throw std::logic_error("write_realization_dump: realization has not been scheduled");
  std::vector<double> sinr(r.ues.size(), std::numeric_limits<double>::quiet_NaN());
  evaluate_links(r, params, config, {}, nullptr, &sinr);

  out << "x y case mode tx_power_w sinr_linear scheduled\n";
  char buf[256];
  for (std::size_t i = 0; i < r.ues.size(); ++i) {
    const auto& ue = r.ues[i];
    const char* mode = ue.mode == TxMode::cellular ? "cellular"
                       : ue.mode == TxMode::d2d    ? "d2d"
                                                   : "none";
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %d %s %.17g %.17g %d\n", ue.pos.x, ue.pos.y,
                  ue.case_label, mode, ue.tx_power_w, sinr[i], ue.scheduled ? 1 : 0);
    out << buf;
  }
  if (!out) throw IoError("write_realization_dump: stream write failed");
}

}  // namespace d2dcell
