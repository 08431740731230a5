#ifndef KP_SELFCHECK_HPP
#define KP_SELFCHECK_HPP

#include <ostream>
#include <string>
#include <vector>

// Embedded oracle suites, runnable from the CLI (`kp selfcheck`).  Each
// suite checks one structural property of the implementation against an
// independent computation route.

namespace kp {

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

// inject_fault perturbs one reference constant so the harness itself can be
// verified to fail; never set outside tests.
std::vector<SuiteResult> run_selfcheck(bool inject_fault = false);

// Prints one machine-readable line per suite; returns the process exit code
// (0 iff all suites pass).
int selfcheck_main(std::ostream& os, bool inject_fault = false);

}  // namespace kp

#endif  // KP_SELFCHECK_HPP
