#pragma once

// Batch verification harness: one self-contained check per headline
// property, each returning pass/fail with a short summary and its runtime.

#include <functional>
#include <string>
#include <vector>

namespace qflag {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string details;
};

std::vector<int> all_check_ids();

CheckResult run_check(int id);  // unknown id -> invalid_argument

// runs the given checks in order, invoking report (when set) after each
std::vector<CheckResult> run_checks(
    const std::vector<int>& ids,
    const std::function<void(const CheckResult&)>& report = {});

}  // namespace qflag
