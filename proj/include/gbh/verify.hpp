// The acceptance suite: one executable check per verification criterion,
// each an exact finite law with a pinned runtime budget.  The CLI `verify`
// subcommand and the acceptance test binary both run exactly this.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gbh::verify {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;  // failure description or summary counts
};

// Runs the numbered criterion (1..10).
CriterionResult run_criterion(int index, unsigned seed);

// Runs all criteria, printing one pass/fail line each; returns true when
// every criterion passes.
bool run_all(unsigned seed, std::ostream& out);

}  // namespace gbh::verify
