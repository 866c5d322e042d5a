#include "d2dcell/param_file.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "d2dcell/errors.hpp"
#include "d2dcell/units.hpp"

namespace d2dcell {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw std::invalid_argument("parameter '" + key + "': " + why);
}

// Splits "value [unit]" into a number and a unit token. The unit may be
// separated by whitespace or glued to the number ("-70dBm").
void split_value_unit(const std::string& key, const std::string& raw, double* number,
                      std::string* unit) {
  const std::string v = trim(raw);
  if (v.empty()) bad_key(key, "empty value");
  std::size_t pos = 0;
  try {
    *number = std::stod(v, &pos);
  } catch (const std::exception&) {
    bad_key(key, "malformed numeric value '" + v + "'");
  }
  *unit = trim(v.substr(pos));
}

double parse_power_watts(const std::string& key, const std::string& raw) {
  double number = 0.0;
  std::string unit;
  split_value_unit(key, raw, &number, &unit);
  if (unit == "W") return number;
  if (unit == "mW") return number * 1e-3;
  if (unit == "dBm") return units::dbm_to_watts(number);
  if (unit.empty()) bad_key(key, "missing unit (expected W, mW or dBm)");
  bad_key(key, "unknown unit '" + unit + "' (expected W, mW or dBm)");
}

double parse_intensity_per_m2(const std::string& key, const std::string& raw) {
  double number = 0.0;
  std::string unit;
  split_value_unit(key, raw, &number, &unit);
  if (unit == "per_m2") return number;
  if (unit == "per_km2") return units::per_km2_to_per_m2(number);
  if (unit.empty()) bad_key(key, "missing unit (expected per_km2 or per_m2)");
  bad_key(key, "unknown unit '" + unit + "' (expected per_km2 or per_m2)");
}

double parse_dimensionless(const std::string& key, const std::string& raw) {
  double number = 0.0;
  std::string unit;
  split_value_unit(key, raw, &number, &unit);
  if (!unit.empty()) bad_key(key, "unexpected unit '" + unit + "'");
  return number;
}

double parse_linear_or_db(const std::string& key, const std::string& raw) {
  double number = 0.0;
  std::string unit;
  split_value_unit(key, raw, &number, &unit);
  if (unit.empty()) return number;
  if (unit == "dB") return units::db_to_linear(number);
  bad_key(key, "unknown unit '" + unit + "' (expected dB or a bare linear value)");
}

BiasFactor parse_bias(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  std::string lowered = v;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "inf" || lowered == "infinity") return BiasFactor::infinite();
  const double number = parse_dimensionless(key, v);
  try {
    return BiasFactor::finite(number);
  } catch (const std::invalid_argument&) {
    bad_key(key, "bias must be >= 0, or inf");
  }
}

int parse_count(const std::string& key, const std::string& raw) {
  const double number = parse_dimensionless(key, raw);
  const int n = static_cast<int>(number);
  if (static_cast<double>(n) != number || n < 1) bad_key(key, "expected a positive integer");
  return n;
}

void set_field(NetworkParams& p, const std::string& key, const std::string& value) {
  if (key == "bs_intensity") {
    p.bs_intensity = parse_intensity_per_m2(key, value);
  } else if (key == "ue_intensity") {
    p.ue_intensity = parse_intensity_per_m2(key, value);
  } else if (key == "potential_d2d_intensity") {
    p.potential_d2d_intensity = parse_intensity_per_m2(key, value);
  } else if (key == "max_tx_power") {
    p.max_tx_power = parse_power_watts(key, value);
  } else if (key == "receiver_sensitivity") {
    p.receiver_sensitivity = parse_power_watts(key, value);
  } else if (key == "cutoff_threshold") {
    p.cutoff_threshold = parse_power_watts(key, value);
  } else if (key == "noise_power") {
    p.noise_power = parse_power_watts(key, value);
  } else if (key == "pathloss_cellular") {
    p.pathloss_cellular = parse_dimensionless(key, value);
  } else if (key == "pathloss_d2d") {
    p.pathloss_d2d = parse_dimensionless(key, value);
  } else if (key == "bias") {
    p.bias = parse_bias(key, value);
  } else if (key == "sinr_threshold") {
    p.sinr_threshold = parse_linear_or_db(key, value);
  } else if (key == "num_channels") {
    p.num_channels = parse_count(key, value);
  } else {
    throw std::invalid_argument("unknown parameter key '" + key + "'");
  }
}

}  // namespace

NetworkParams parse_params(std::istream& in, NetworkParams base) {
  NetworkParams params = base;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string entry = trim(line);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("parameter file line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate parameter key '" + key + "'");
    }
    set_field(params, key, value);
  }
  return params;
}

NetworkParams load_params_file(const std::string& path, NetworkParams base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parameter file '" + path + "'");
  return parse_params(in, base);
}

void apply_override(NetworkParams& params, const std::string& key, const std::string& value) {
  set_field(params, trim(key), trim(value));
}

std::string params_to_string(const NetworkParams& p) {
  char buf[64];
  std::ostringstream os;
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  os << "bs_intensity = " << num(p.bs_intensity) << " per_m2\n";
  os << "ue_intensity = " << num(p.ue_intensity) << " per_m2\n";
  os << "potential_d2d_intensity = " << num(p.potential_d2d_intensity) << " per_m2\n";
  os << "max_tx_power = " << num(p.max_tx_power) << " W\n";
  os << "receiver_sensitivity = " << num(p.receiver_sensitivity) << " W\n";
  os << "cutoff_threshold = " << num(p.cutoff_threshold) << " W\n";
  os << "pathloss_cellular = " << num(p.pathloss_cellular) << "\n";
  os << "pathloss_d2d = " << num(p.pathloss_d2d) << "\n";
  os << "bias = " << (p.bias.is_infinite() ? std::string("inf") : num(p.bias.value())) << "\n";
  os << "sinr_threshold = " << num(p.sinr_threshold) << "\n";
  os << "noise_power = " << num(p.noise_power) << " W\n";
  os << "num_channels = " << p.num_channels << "\n";
  return os.str();
}

}  // namespace d2dcell
