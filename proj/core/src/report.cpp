#include "tractlab/report.hpp"

namespace tractlab {

std::string Witness::str() const {
  std::string out;
  for (const auto& [label, sum] : parts) {
    if (!out.empty()) out += ", ";
    out += label + "=" + sum.str();
  }
  if (!note.empty()) {
    if (!out.empty()) out += " ";
    out += "[" + note + "]";
  }
  return out;
}

std::string AxiomReport::summary() const {
  std::string out = axiom;
  out += holds ? " holds" : " fails";
  out += " (bound " + std::to_string(bound_checked) + ")";
  if (!holds && witness) out += ": " + witness->str();
  return out;
}

bool all_hold(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

}  // namespace tractlab
