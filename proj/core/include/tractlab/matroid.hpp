#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tractlab {

// Matroid on a small labeled ground set, stored by its circuits as
// bitmasks.  Construction validates the circuit axioms: no empty circuit,
// an antichain, and weak elimination.  Circuits are kept in a canonical
// order: lexicographic on their sorted element-index lists.
class Matroid {
public:
  static Matroid from_circuits(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& circuits);
  // rank r on elements "1".."n"; circuits are the (r+1)-subsets
  static Matroid uniform(int rank, int n);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  int element_index(std::string_view label) const;  // -1 when absent

  const std::vector<std::uint32_t>& circuit_masks() const { return circuits_; }
  std::vector<std::vector<std::string>> circuits() const;

  int rank() const;
  bool is_independent(std::uint32_t subset) const;
  std::vector<std::uint32_t> bases() const;

  Matroid dual() const;
  Matroid deleted(const std::string& e) const;
  Matroid contracted(const std::string& e) const;

  // same ground labels in the same order and the same circuits
  friend bool operator==(const Matroid&, const Matroid&) = default;

private:
  Matroid(std::vector<std::string> ground, std::vector<std::uint32_t> circuits);
  std::vector<std::string> ground_;
  std::vector<std::uint32_t> circuits_;
};

}  // namespace tractlab
