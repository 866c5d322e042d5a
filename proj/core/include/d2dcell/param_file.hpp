#pragma once

#include <istream>
#include <string>

#include "d2dcell/network_params.hpp"

namespace d2dcell {

// Flat key-value parameter file. One "key = value [unit]" entry per line,
// '#' starts a comment. Keys are exactly the NetworkParams field names.
// Dimensioned keys require a unit annotation:
//   intensities: per_km2 | per_m2
//   powers:      W | mW | dBm
//   sinr_threshold: dB or bare (linear)
//   bias: bare number, or inf / infinity
// Unknown keys, duplicate keys and malformed values raise
// std::invalid_argument naming the key. Keys not present keep the value from
// 'base'.
NetworkParams parse_params(std::istream& in, NetworkParams base = {});

NetworkParams load_params_file(const std::string& path, NetworkParams base = {});

// Applies one "key=value" override (same syntax as a file entry, unit
// included in the value string).
void apply_override(NetworkParams& params, const std::string& key, const std::string& value);

// Canonical file-format rendering of a parameter set (SI units), parseable by
// parse_params. Used to embed full parameter sets in result metadata.
std::string params_to_string(const NetworkParams& params);

}  // namespace d2dcell
