#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

#include "tractlab/tract.hpp"

namespace tractlab {

using Rational = boost::multiprecision::cpp_rational;

// Exact point on the unit circle.
struct PhasePoint {
  Rational x;
  Rational y;

  bool on_unit_circle() const { return x * x + y * y == 1; }
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

PhasePoint phase_mul(const PhasePoint& a, const PhasePoint& b);
PhasePoint phase_neg(const PhasePoint& a);
std::string phase_name(const PhasePoint& p);

// Whether some strictly positive rational combination of the points is
// zero.  Decided exactly via separating functionals: a combination exists
// iff no direction has nonnegative inner product with every point and a
// strictly positive one with at least one.
bool contains_zero_positive_combination(std::span<const PhasePoint> points);

// Finite multiplicative group of unit-circle points.  Validation checks
// membership of 1, closure under products and negation, and exactness of
// every point.
class PhaseGroup {
public:
  static PhaseGroup make(std::vector<PhasePoint> points);

  std::size_t unit_count() const { return points_.size(); }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const PhasePoint& point(ElemId unit) const { return points_[unit - 1]; }

private:
  PhaseGroup() = default;
  std::vector<PhasePoint> points_;  // index unit-1
  CarrierPtr carrier_;
};

PhaseGroup quarter_turns();  // {1, -1, i, -i}

// Null set: a nonempty sum is null iff some positive combination of its
// phases vanishes; the empty sum is null.  No norm bound.
Tract phase_tract(const PhaseGroup& g, std::string name = "phase");

// Same null set on norms <= 3; every sum of norm >= 4 is null.
Tract weaken(const Pasture& p, std::string name = {});

// weaken applied to the norm-3 truncation of the phase tract.
Tract weak_phase_tract(const PhaseGroup& g, std::string name = "weak_phase");

}  // namespace tractlab
