#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace d2dcell {

// Tabular metric output. Metadata is an ordered key/value block carrying the
// full parameter set, seed and tool version, enough to re-run the command
// that produced the table. runtime_seconds is informational only and is
// never serialized, so repeated runs with the same seed emit identical bytes.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // every row has columns.size() cells
  std::vector<std::pair<std::string, std::string>> metadata;
  double runtime_seconds = 0.0;

  void add_meta(std::string key, std::string value);
  void check() const;  // throws std::invalid_argument on ragged rows
};

enum class TableFormat { csv, json };

// CSV: '#'-prefixed "key = value" metadata lines, then a header row, then
// numeric rows (nan for not-applicable cells).
// JSON: {"metadata": {...}, "columns": [...], "rows": [[...]]} with null for
// nan cells; key order is preserved.
void write_table(const ResultTable& table, TableFormat format, std::ostream& out);
void write_table_file(const ResultTable& table, TableFormat format, const std::string& path);

ResultTable read_table_csv(std::istream& in);
ResultTable read_table_json(std::istream& in);

// Shortest round-trippable decimal rendering used everywhere a double is
// printed ("%.17g", "nan" for NaN).
std::string format_double(double value);

}  // namespace d2dcell
