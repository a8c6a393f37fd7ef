// Machine-readable check reports shared by every subcommand.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tatebc {

struct CheckResult {
  std::string id;
  bool pass = false;
  nlohmann::json values = nlohmann::json::object();
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::vector<CheckResult> checks;
  std::optional<double> wall_ms;  // only when timing was requested

  bool pass() const;
  /// Checks sorted by id; keys sorted.
  nlohmann::json to_json() const;
};

/// FNV-1a 64 of the compact dump, as hex.
std::string digest(const nlohmann::json& j);

}  // namespace tatebc
