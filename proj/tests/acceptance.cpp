#include <cstdio>

#include "qflag/verify.hpp"

int main() {
  bool all = true;
  qflag::run_checks(qflag::all_check_ids(), [&](const qflag::CheckResult& r) {
    all = all && r.pass;
    std::printf("[%s] %2d %-58s %7.2fs  %s\n", r.pass ? "pass" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.details.c_str());
    std::fflush(stdout);
  });
  return all ? 0 : 1;
}
