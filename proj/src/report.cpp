#include "tatebc/report.hpp"

#include <algorithm>
#include <cstdio>

namespace tatebc {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  std::vector<CheckResult> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : sorted) results.push_back({{"id", c.id}, {"pass", c.pass}, {"values", c.values}});
  nlohmann::json out = {
      {"schema", "tatebc.report/1"},
      {"command", command},
      {"inputs", inputs},
      {"inputs_digest", digest(inputs)},
      {"results", results},
      {"pass", pass()},
      {"versions",
       {{"tatebc", "0.1.0"},
        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                              "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
  };
  out["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  if (wall_ms) out["wall_time_ms"] = *wall_ms;
  return out;
}

std::string digest(const nlohmann::json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tatebc
