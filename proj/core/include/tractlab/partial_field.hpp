#pragma once

#include <string>
#include <vector>

#include "tractlab/tract.hpp"

namespace tractlab {

// Finite commutative ring with identity, given by tables.  Construction
// verifies the ring axioms exhaustively.
class FiniteRing {
public:
  FiniteRing(std::vector<std::string> names,
             const std::vector<std::vector<ElemId>>& add,
             const std::vector<std::vector<ElemId>>& mul, ElemId zero,
             ElemId one, std::string name);

  static FiniteRing integers_mod(int n);
  static FiniteRing gf(int p);  // prime p <= 7

  std::size_t size() const { return names_.size(); }
  const std::string& name() const { return name_; }
  ElemId zero() const { return zero_; }
  ElemId one() const { return one_; }
  ElemId add(ElemId a, ElemId b) const { return add_[a * names_.size() + b]; }
  ElemId mul(ElemId a, ElemId b) const { return mul_[a * names_.size() + b]; }
  ElemId neg(ElemId a) const { return neg_[a]; }
  const std::string& elem_name(ElemId e) const { return names_[e]; }
  std::optional<ElemId> find(std::string_view name) const;

  bool is_unit(ElemId a) const;
  std::vector<ElemId> units() const;

private:
  std::vector<std::string> names_;
  std::vector<ElemId> add_;
  std::vector<ElemId> mul_;
  std::vector<ElemId> neg_;
  ElemId zero_;
  ElemId one_;
  std::string name_;
};

// A subgroup of a ring's unit group containing -1, with nullity inherited
// from the ring: a formal sum over the subgroup is null when it adds to
// zero in the ring.
class PartialField {
public:
  // closes the generators (plus -1) under products and inverses; every
  // generator must be a unit of the ring
  static PartialField make(FiniteRing ring, const std::vector<ElemId>& generators,
                           std::string name = {});

  const FiniteRing& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  // ring element behind a carrier unit
  ElemId ring_elem(ElemId unit) const { return group_[unit - 1]; }
  std::size_t group_size() const { return group_.size(); }

private:
  PartialField(FiniteRing ring, std::vector<ElemId> group, std::string name);
  FiniteRing ring_;
  std::vector<ElemId> group_;  // ring ids, carrier unit u -> group_[u-1]
  CarrierPtr carrier_;
  std::string name_;
};

// Norm <= 3 sums over the subgroup that vanish in the ring.
Pasture pasture_null(const PartialField& pf);

// The same vanishing condition at every norm, as an unbounded tract.
Tract tract_embedding(const PartialField& pf);

// tract_embedding of GF(p) with the full unit group, p prime at most 7.
Tract gf_tract(int p);

}  // namespace tractlab
