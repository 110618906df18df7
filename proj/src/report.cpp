#include "nlslab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace nlslab {

bool ExperimentReport::passed() const {
  for (const auto& [name, ok] : verdicts)
    if (!ok) return false;
  return true;
}

void ExperimentReport::add_verdict(const std::string& name, bool ok) {
  verdicts.emplace_back(name, ok);
}

double ExperimentReport::value(int row, const std::string& column) const {
  for (size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == column) return rows.at(row).values.at(c);
  throw std::out_of_range("ExperimentReport: no column " + column);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void emit_report(const ExperimentReport& rep, const std::string& csv_path,
                 const std::string& json_path) {
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("emit_report: cannot write " + csv_path);
    csv << rep.sweep_key;
    for (const auto& c : rep.columns) csv << "," << c;
    csv << "\n";
    for (const auto& row : rep.rows) {
      csv << format_double(row.key);
      for (double v : row.values) csv << "," << format_double(v);
      csv << "\n";
    }
  }
  {
    nlohmann::ordered_json j;
    j["kind"] = rep.kind;
    j["tool_version"] = kToolVersion;
    j["config_hash"] = rep.config_hash;
    j["seed"] = rep.seed;
    j["rows"] = rep.rows.size();
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    if (rep.rows.empty() && rep.verdicts.empty())
      verdicts["no-data"] = true;
    for (const auto& [name, ok] : rep.verdicts) verdicts[name] = ok;
    j["verdicts"] = verdicts;
    nlohmann::ordered_json prov = nlohmann::ordered_json::object();
    for (const auto& [name, v] : rep.provenance) prov[name] = v;
    j["provenance"] = prov;
    std::ofstream js(json_path, std::ios::binary);
    if (!js) throw std::runtime_error("emit_report: cannot write " + json_path);
    js << j.dump(2) << "\n";
  }
}

}  // namespace nlslab
