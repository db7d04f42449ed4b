#pragma once

#include <span>
#include <string>
#include <vector>

#include "tractlab/report.hpp"
#include "tractlab/tract.hpp"

namespace tractlab {

// Multivalued addition on a sorted element-id set.
struct HypersumSet {
  std::vector<ElemId> elems;  // ascending, may include 0

  bool contains(ElemId e) const;
  bool contains_zero() const { return contains(0); }
  friend bool operator==(const HypersumSet&, const HypersumSet&) = default;
};

// Finite hyperfield presented by tables: a multiplicative carrier plus a
// hypersum table and negation map.  Structural shape is validated here;
// the hyperfield axioms themselves are checked by
// check_hyperfield_axioms, so deliberately broken tables can be built and
// diagnosed.
class Hyperfield {
public:
  Hyperfield(std::vector<std::string> names,
             const std::vector<std::vector<ElemId>>& mul,
             std::vector<ElemId> neg,
             std::vector<std::vector<std::vector<ElemId>>> hypersum,
             ElemId one, std::string name);

  std::size_t size() const { return carrier_->size(); }
  const std::string& name() const { return name_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const TractCarrier& carrier() const { return *carrier_; }

  ElemId zero() const { return 0; }
  ElemId one() const { return carrier_->one(); }
  ElemId neg(ElemId e) const { return neg_[e]; }
  ElemId mul(ElemId a, ElemId b) const { return carrier_->mul(a, b); }

  HypersumSet hypersum(ElemId a, ElemId b) const;

private:
  CarrierPtr carrier_;
  std::vector<ElemId> neg_;
  std::vector<std::vector<ElemId>> table_;  // (a, b) -> sorted element set
  std::string name_;
};

// Left fold of the hypersum over a list: {0} for the empty list, and
// union over partial results otherwise.
HypersumSet hypersum_many(const Hyperfield& h, std::span<const ElemId> elems);

// HG1 nonempty sums, HG2 associativity, HG3 additive identity, HG4 unique
// negatives, HG5 commutativity, HG6 reversibility, HR3 absorbing zero,
// HR4 distributivity.
std::vector<AxiomReport> check_hyperfield_axioms(const Hyperfield& h);

// A hyperfield is stringent when a + b is a singleton whenever b != -a.
AxiomReport check_stringency(const Hyperfield& h);

// Tract whose null set is "0 lies in the iterated hypersum".  With no
// bound the oracle answers at every norm.
Tract tract_of(const Hyperfield& h, std::optional<int> bound = std::nullopt);
Pasture pasture_of(const Hyperfield& h);

// Compares the fusion closure of the norm-3 truncation against the full
// hypersum null set up to the bound.
AxiomReport check_hap(const Hyperfield& h, int bound);

// [0] STRINGENT-VS-SF: the stringency verdict agrees with the bounded SF
//     verdict of tract_of(h).
// [1] HYPERSUM-SINGLETON: every zero-free iterated hypersum of 2..max_len
//     units is a singleton.
std::vector<AxiomReport> check_stringency_equivalence(const Hyperfield& h,
                                                      int sf_bound,
                                                      int max_len);

Hyperfield make_sign_hyperfield();
Hyperfield make_field_hyperfield(int p);  // prime p, ordinary addition

// Product on {0} union (units x units): hypersums are taken componentwise
// on the unit parts, with 0 included exactly when the arguments are
// negatives of each other.
Hyperfield make_product_hyperfield(const Hyperfield& a, const Hyperfield& b,
                                   std::string name = {});

}  // namespace tractlab
