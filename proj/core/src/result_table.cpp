#include "d2dcell/result_table.hpp"

#include <cmath>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "d2dcell/errors.hpp"

namespace d2dcell {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

void ResultTable::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void ResultTable::check() const {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw std::invalid_argument("ResultTable: row width does not match column count");
    }
  }
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_table(const ResultTable& table, TableFormat format, std::ostream& out) {
  table.check();
  if (format == TableFormat::csv) {
    for (const auto& [key, value] : table.metadata) {
      out << "# " << key << " = " << value << "\n";
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << format_double(row[c]);
      }
      out << "\n";
    }
  } else {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    j["metadata"] = std::move(meta);
    j["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
      for (const double v : row) {
        if (std::isnan(v)) {
          jrow.push_back(nullptr);
        } else {
          jrow.push_back(v);
        }
      }
      rows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  }
  if (!out) throw IoError("write_table: stream write failed");
}

void write_table_file(const ResultTable& table, TableFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  write_table(table, format, out);
  out.flush();
  if (!out) throw IoError("write failed for output file '" + path + "'");
}

ResultTable read_table_csv(std::istream& in) {
  ResultTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string entry = trim(line.substr(1));
      const std::size_t eq = entry.find('=');
      if (eq != std::string::npos) {
        table.add_meta(trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
      }
      continue;
    }
    std::stringstream cells(line);
    std::string cell;
    if (!have_header) {
      while (std::getline(cells, cell, ',')) table.columns.push_back(trim(cell));
      have_header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) {
      const std::string v = trim(cell);
      row.push_back(v == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(v));
    }
    table.rows.push_back(std::move(row));
  }
  table.check();
  return table;
}

ResultTable read_table_json(std::istream& in) {
  nlohmann::ordered_json j;
  in >> j;
  ResultTable table;
  for (const auto& [key, value] : j.at("metadata").items()) {
    table.add_meta(key, value.get<std::string>());
  }
  table.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jrow : j.at("rows")) {
    std::vector<double> row;
    for (const auto& cell : jrow) {
      row.push_back(cell.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                   : cell.get<double>());
    }
    table.rows.push_back(std::move(row));
  }
  table.check();
  return table;
}

}  // namespace d2dcell
