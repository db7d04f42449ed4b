#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tractlab/formal_sum.hpp"

namespace tractlab {

// Labeled formal sums that exhibit a failed check, e.g.
// {("alpha", ...), ("beta", ...), ("gamma", ...)} for a fusion violation.
struct Witness {
  std::vector<std::pair<std::string, FormalSum>> parts;
  std::string note;

  std::string str() const;
};

struct AxiomReport {
  std::string axiom;
  bool holds = true;
  std::optional<Witness> witness;
  int bound_checked = 0;
  std::uint64_t cases = 0;       // configurations inspected
  std::uint64_t violations = 0;  // configurations that failed

  // e.g. "SF holds (bound 5)" or "SF fails (bound 6): alpha=..., ..."
  std::string summary() const;
};

bool all_hold(const std::vector<AxiomReport>& reports);

}  // namespace tractlab
