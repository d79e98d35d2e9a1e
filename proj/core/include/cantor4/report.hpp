#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace cantor4 {

/// Machine-readable record of one verification run.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> params;
  std::map<std::string, double> metrics;
  std::map<std::string, bool> checks;
  std::map<std::string, double> tolerances;
  std::int64_t duration_ms = 0;
  std::string version;

  // Conjunction of all checks; true when there are none.
  bool pass() const;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
  // Sorted keys, two-space indent, trailing newline.
  std::string dump() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Library version string baked in at configure time.
const char* library_version() noexcept;

}  // namespace cantor4
