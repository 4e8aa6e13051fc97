// Acceptance suite runner: one pass/fail line per check, nonzero exit on any
// failure.  The CLI `selftest` subcommand prints the identical report.

#include <iostream>

#include "groverwalk/selftest.hpp"

int main() {
  const int failures = groverwalk::selftest::print_report(std::cout);
  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
