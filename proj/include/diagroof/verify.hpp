#pragma once

#include <functional>
#include <string>
#include <vector>

namespace diagroof {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

enum class Suite { all, theorem4, edcurve, rank2, symmetry };

Suite parse_suite(const std::string& name);

/// Numbered end-to-end checks. Each compares library output with reference
/// constants or with the brute-force oracles, at fixed tolerances and a
/// wall-clock limit.
struct Criterion {
  std::string id;
  std::string name;
  double time_limit_seconds;
  std::function<CheckResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

std::vector<std::string> suite_members(Suite suite);

/// Runs the criteria of a suite, invoking `report` after each one.
std::vector<CheckResult> run_suite(Suite suite, const std::function<void(const CheckResult&)>& report = {});

}  // namespace diagroof
