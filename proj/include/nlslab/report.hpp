#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nlslab {

struct ExperimentRow {
  double key = 0.0;
  std::vector<double> values;  // aligned with ExperimentReport::columns
};

// Rows of (sweep value -> measured quantities) with verdict flags derived
// only from stated tolerances, plus provenance.
struct ExperimentReport {
  std::string kind;
  std::string sweep_key = "sweep";
  std::vector<std::string> columns;
  std::vector<ExperimentRow> rows;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, double>> provenance;
  std::uint64_t seed = 0;
  std::string config_hash;  // filled by the CLI layer

  bool passed() const;
  void add_verdict(const std::string& name, bool ok);
  double value(int row, const std::string& column) const;
};

// CSV: header "<sweep_key>,<columns...>", one row per sweep value, %.17g
// formatting; byte-identical for identical reports.  JSON carries the
// verdicts, config hash, seed and tool version.
void emit_report(const ExperimentReport& rep, const std::string& csv_path,
                 const std::string& json_path);

std::string format_double(double v);  // shortest round-trip decimal

// FNV-1a 64-bit over raw bytes, hex-encoded.
std::string fnv1a_hex(const std::string& bytes);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace nlslab
