// The acceptance battery behind `tatebc selftest`.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tatebc/report.hpp"

namespace tatebc {

struct Criterion {
  int number;
  std::string id;  // zero-padded so that ids sort in criterion order
  std::function<CheckResult(std::uint64_t seed)> run;
};

/// Criteria 1-14 in order.
const std::vector<Criterion>& acceptance_criteria();
/// Runs every criterion; exceptions become failing results.
std::vector<CheckResult> run_selftest(std::uint64_t seed);
CheckResult run_criterion(const Criterion& c, std::uint64_t seed);

}  // namespace tatebc
