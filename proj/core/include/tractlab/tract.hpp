#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "tractlab/formal_sum.hpp"

namespace tractlab {

// Raised when a null-set query lies outside the range the oracle can
// answer exactly.  Callers that enumerate up to a bound surface this as a
// usage error rather than guessing.
class BoundError : public std::runtime_error {
public:
  BoundError(int requested_norm, int valid_bound);
  int requested_norm() const { return requested_; }
  int valid_bound() const { return valid_; }

private:
  int requested_;
  int valid_;
};

// Membership test for the null set N subset of N[F_x].  An oracle may be
// exact on all norms (no bound) or only up to a norm bound, beyond which
// queries throw BoundError.
class NullOracle {
public:
  using Predicate = std::function<bool(const FormalSum&)>;

  NullOracle(Predicate membership, std::optional<int> valid_norm_bound,
             std::string description = {});

  bool contains(const FormalSum& a) const;
  std::optional<int> bound() const { return bound_; }
  const std::string& description() const { return description_; }

private:
  Predicate membership_;
  std::optional<int> bound_;
  std::string description_;
};

// Multiplicative map on a carrier with order dividing 2, fixing zero.
class Involution {
public:
  static Involution identity(CarrierPtr carrier);
  // map[e] is the image of e; validated to be a self-inverse
  // multiplicative bijection fixing zero.
  Involution(CarrierPtr carrier, std::vector<ElemId> map);

  ElemId operator()(ElemId e) const { return map_[e]; }
  FormalSum apply(const FormalSum& a) const;
  bool is_identity() const;
  const CarrierPtr& carrier_ptr() const { return carrier_; }

private:
  CarrierPtr carrier_;
  std::vector<ElemId> map_;
};

// A carrier together with its null-set oracle (and an involution, identity
// unless stated).  Axioms are not enforced here; the checkers report on
// them explicitly so corrupted inputs can be diagnosed.
class Tract {
public:
  Tract(CarrierPtr carrier, NullOracle null, std::string name);
  Tract(CarrierPtr carrier, NullOracle null, Involution inv, std::string name);

  const TractCarrier& carrier() const { return *carrier_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const NullOracle& null() const { return null_; }
  const Involution& involution() const { return involution_; }
  const std::string& name() const { return name_; }

  bool is_null(const FormalSum& a) const { return null_.contains(a); }
  std::optional<int> bound() const { return null_.bound(); }

  FormalSum empty_sum() const { return FormalSum(carrier_); }
  // convenience: build a sum from element names, e.g. {"1", "1", "-1"}
  FormalSum sum(std::initializer_list<std::string_view> names) const;

private:
  CarrierPtr carrier_;
  NullOracle null_;
  Involution involution_;
  std::string name_;
};

// Tract whose null set is determined by its members of norm at most 3,
// stored explicitly.  Construction closes the given sums under unit
// scaling, inserts the empty sum, and requires 1 + epsilon to be null
// with epsilon the unique such unit.
class Pasture {
public:
  Pasture(CarrierPtr carrier, std::vector<FormalSum> null_sums,
          std::string name);

  const TractCarrier& carrier() const { return *carrier_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const std::string& name() const { return name_; }

  // orbit-closed, sorted, deduplicated; norms at most 3
  const std::vector<FormalSum>& null_sums() const { return null_sums_; }

  bool contains(const FormalSum& a) const;  // BoundError above norm 3
  Tract as_tract() const;

private:
  CarrierPtr carrier_;
  std::vector<FormalSum> null_sums_;
  std::string name_;
};

struct Morphism {
  Tract source;
  Tract target;
  std::vector<ElemId> map;  // image of each source element
  std::string name;
};

// Validates that map is a monoid homomorphism sending zero to zero and
// units to units.  Null-set preservation is a bounded check, done by
// check_morphism.
Morphism make_morphism(Tract source, Tract target, std::vector<ElemId> map,
                       std::string name = {});

}  // namespace tractlab
