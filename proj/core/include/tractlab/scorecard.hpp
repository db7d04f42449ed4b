#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tractlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the scorecard: one result per acceptance check, in a fixed order,
// deterministic for a given jobs setting.
std::vector<CriterionResult> run_scorecard(int jobs = 1);

// One line per criterion plus a summary line; returns true when every
// criterion passed.
bool print_scorecard(const std::vector<CriterionResult>& results,
                     std::ostream& out);

}  // namespace tractlab
