#include "cantor4/report.hpp"

#include "cantor4/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cantor4 {

namespace {

// Non-finite reals have no JSON number form; they travel as strings.
nlohmann::json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  throw DomainError("report: unrecognised real '" + s + "'");
}

nlohmann::json reals_to_json(const std::map<std::string, double>& m) {
  auto out = nlohmann::json::object();
  for (const auto& [k, v] : m) out[k] = real_to_json(v);
  return out;
}

std::map<std::string, double> reals_from_json(const nlohmann::json& j) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.items()) out[k] = real_from_json(v);
  return out;
}

}  // namespace

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["command"] = command;
  j["params"] = params;
  j["metrics"] = reals_to_json(metrics);
  j["checks"] = checks;
  j["tolerances"] = reals_to_json(tolerances);
  j["pass"] = pass();
  j["duration_ms"] = duration_ms;
  j["version"] = version;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.metrics = reals_from_json(j.at("metrics"));
    r.checks = j.at("checks").get<std::map<std::string, bool>>();
    r.tolerances = reals_from_json(j.at("tolerances"));
    r.duration_ms = j.at("duration_ms").get<std::int64_t>();
    r.version = j.at("version").get<std::string>();
    if (j.contains("pass") && j.at("pass").get<bool>() != r.pass()) {
      throw DomainError("report: pass flag disagrees with checks");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("report: malformed JSON: ") + e.what());
  }
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

const char* library_version() noexcept { return CANTOR4_VERSION_STRING; }

}  // namespace cantor4
