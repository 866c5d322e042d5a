#pragma once

#include "d2dcell/interference.hpp"
#include "d2dcell/network_params.hpp"
#include "d2dcell/quadrature.hpp"

namespace d2dcell {

enum class LinkMode { cellular, d2d };

struct OutageResult {
  double outage_probability = 0.0;
  // Diagnostic factors at s = theta / rho_o:
  // outage = 1 - noise_factor * lt_cellular * lt_d2d.
  double noise_factor = 1.0;
  double lt_cellular = 1.0;
  double lt_d2d = 1.0;
};

// SINR outage of a D2D link at params.sinr_threshold.
OutageResult d2d_outage(const NetworkParams& params, const QuadratureSpec& spec = {});

// SINR outage of a cellular uplink at params.sinr_threshold. The quadrature
// and closed-form routes of the BS-victim transforms agree to quadrature
// tolerance whenever the cellular exponent is 4.
OutageResult cellular_outage(const NetworkParams& params, LtRoute route = LtRoute::automatic,
                             const QuadratureSpec& spec = {});

// Mean link capacity E[ln(1 + SINR)] in nats/s/Hz for a scheduled link of the
// given mode, integrated over the SINR ccdf.
double link_capacity(LinkMode mode, const NetworkParams& params, const QuadratureSpec& spec = {});

// Mean rate of a generic potential D2D UE: own D2D capacity when it selects
// D2D, otherwise a per-user share of the cellular capacity halved for the
// two-hop relay through the BS.
double potential_d2d_rate(const NetworkParams& params, const QuadratureSpec& spec = {});

// Area capacity density in nats/s/Hz/m^2: D2D links plus one cellular uplink
// per BS.
double total_network_capacity(const NetworkParams& params, const QuadratureSpec& spec = {});

}  // namespace d2dcell
