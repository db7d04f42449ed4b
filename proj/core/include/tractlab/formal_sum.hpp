#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tractlab {

using ElemId = std::uint8_t;

// Finite multiplicative carrier: a distinguished absorbing zero at index 0
// plus a finite abelian group of units.  epsilon is the designated
// "minus one": a unit whose square is the identity.  The additive/null
// structure lives elsewhere; this class is multiplication only.
class TractCarrier {
public:
  // names[0] is zero.  mul is a full (size x size) table over indices.
  // Throws std::invalid_argument unless the units form an abelian group
  // with identity `one`, zero is absorbing, and epsilon * epsilon == one.
  TractCarrier(std::vector<std::string> names,
               const std::vector<std::vector<ElemId>>& mul,
               ElemId one, ElemId epsilon);

  std::size_t size() const { return names_.size(); }
  std::size_t unit_count() const { return names_.size() - 1; }

  ElemId zero() const { return 0; }
  ElemId one() const { return one_; }
  ElemId epsilon() const { return eps_; }

  ElemId mul(ElemId a, ElemId b) const { return mul_[a * names_.size() + b]; }
  ElemId inverse(ElemId unit) const;

  const std::string& name(ElemId e) const { return names_[e]; }
  std::optional<ElemId> find(std::string_view name) const;

  bool same_structure(const TractCarrier& other) const;

private:
  std::vector<std::string> names_;
  std::vector<ElemId> mul_;
  std::vector<ElemId> inv_;
  ElemId one_;
  ElemId eps_;
};

using CarrierPtr = std::shared_ptr<const TractCarrier>;

CarrierPtr make_carrier(std::vector<std::string> names,
                        const std::vector<std::vector<ElemId>>& mul,
                        ElemId one, ElemId epsilon);

// Finite multiset of units with positive multiplicities: an element of the
// group semiring N[F_x].  There is no cancellation: 1 + (-1) is a sum of
// norm 2, distinct from the empty sum.
class FormalSum {
public:
  struct Term {
    ElemId elem;
    std::uint32_t mult;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit FormalSum(CarrierPtr carrier);
  FormalSum(CarrierPtr carrier, std::initializer_list<ElemId> elems);
  FormalSum(CarrierPtr carrier, std::span<const ElemId> elems);

  const TractCarrier& carrier() const { return *carrier_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }

  int norm() const { return norm_; }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // expanded element list, ascending by id, one entry per multiplicity
  std::vector<ElemId> elements() const;

  FormalSum scaled(ElemId unit) const;
  FormalSum negated() const;  // scaled by epsilon

  friend FormalSum operator+(const FormalSum& a, const FormalSum& b);
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  friend bool operator==(const FormalSum& a, const FormalSum& b);
  // total order: first by norm, then lexicographic on the expanded
  // element sequence
  friend std::strong_ordering operator<=>(const FormalSum& a,
                                          const FormalSum& b);

  std::string str() const;

private:
  friend struct FormalSumHash;

  CarrierPtr carrier_;
  std::vector<Term> terms_;  // ascending by elem, multiplicities positive
  int norm_ = 0;

  void add_term(ElemId elem, std::uint32_t mult);
};

struct FormalSumHash {
  std::size_t operator()(const FormalSum& s) const;
};

// All formal sums with lo <= norm <= bound, listed in (norm, lex) order.
std::vector<FormalSum> enumerate_sums(const CarrierPtr& carrier, int bound,
                                      int lo = 0);

// Least element of the unit orbit {u * a : u unit} in (norm, lex) order.
FormalSum orbit_min(const FormalSum& a);

}  // namespace tractlab
