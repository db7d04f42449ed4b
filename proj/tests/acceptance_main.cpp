// Acceptance gate: runs every scorecard criterion and prints one verdict
// line each.  Exits 0 only when all of them pass.
#include <iostream>

#include "tractlab/parallel.hpp"
#include "tractlab/scorecard.hpp"

int main() {
  int jobs = tractlab::resolve_jobs(0);
  auto results = tractlab::run_scorecard(jobs);
  bool all_passed = tractlab::print_scorecard(results, std::cout);
  return all_passed ? 0 : 1;
}
