#include "tractlab/phase.hpp"

#include <algorithm>
#include <memory>

#include "tractlab/closures.hpp"

namespace tractlab {

PhasePoint phase_mul(const PhasePoint& a, const PhasePoint& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

PhasePoint phase_neg(const PhasePoint& a) { return {-a.x, -a.y}; }

std::string phase_name(const PhasePoint& p) {
  if (p == PhasePoint{1, 0}) return "1";
  if (p == PhasePoint{-1, 0}) return "-1";
  if (p == PhasePoint{0, 1}) return "i";
  if (p == PhasePoint{0, -1}) return "-i";
  return "(" + p.x.str() + "," + p.y.str() + ")";
}

bool contains_zero_positive_combination(std::span<const PhasePoint> points) {
  if (points.empty()) return false;
  // By a separation argument in the plane, if some direction u has
  // <u, p> >= 0 for every point and > 0 for at least one, no strictly
  // positive combination can vanish; and if such a u exists at all, one
  // exists among the points and their quarter turns.
  auto dot = [](const PhasePoint& u, const PhasePoint& p) {
    return u.x * p.x + u.y * p.y;
  };
  std::vector<PhasePoint> candidates;
  for (const PhasePoint& p : points) {
    candidates.push_back(p);
    candidates.push_back(phase_neg(p));
    candidates.push_back({-p.y, p.x});
    candidates.push_back({p.y, -p.x});
  }
  for (const PhasePoint& u : candidates) {
    bool all_nonneg = true;
    bool some_pos = false;
    for (const PhasePoint& p : points) {
      Rational d = dot(u, p);
      if (d < 0) {
        all_nonneg = false;
        break;
      }
      if (d > 0) some_pos = true;
    }
    if (all_nonneg && some_pos) return false;
  }
  return true;
}

PhaseGroup PhaseGroup::make(std::vector<PhasePoint> points) {
  if (points.empty()) throw std::invalid_argument("phase group needs points");
  for (const PhasePoint& p : points)
    if (!p.on_unit_circle())
      throw std::invalid_argument("phase point " + phase_name(p) +
                                  " is not on the unit circle");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("phase points must be distinct");

  auto index_of = [&](const PhasePoint& p) -> int {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return int(i);
    return -1;
  };
  if (index_of({1, 0}) < 0)
    throw std::invalid_argument("phase group must contain 1");
  for (const PhasePoint& p : points) {
    if (index_of(phase_neg(p)) < 0)
      throw std::invalid_argument("phase group must be closed under negation");
    for (const PhasePoint& q : points)
      if (index_of(phase_mul(p, q)) < 0)
        throw std::invalid_argument("phase group must be closed under products");
  }

  // order: 1 first, then the rest as given
  std::stable_sort(points.begin(), points.end(),
                   [](const PhasePoint& a, const PhasePoint& b) {
                     return (a == PhasePoint{1, 0}) > (b == PhasePoint{1, 0});
                   });

  const std::size_t u = points.size();
  if (u + 1 > 256) throw std::invalid_argument("phase group too large");
  std::vector<std::string> names(u + 1);
  names[0] = "0";
  for (std::size_t i = 0; i < u; ++i) names[i + 1] = phase_name(points[i]);
  std::vector<std::vector<ElemId>> mul(u + 1, std::vector<ElemId>(u + 1, 0));
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j)
      mul[i + 1][j + 1] = ElemId(1 + index_of(phase_mul(points[i], points[j])));
  ElemId eps = ElemId(1 + index_of(phase_neg({1, 0})));

  PhaseGroup g;
  g.points_ = std::move(points);
  g.carrier_ = make_carrier(std::move(names), mul, 1, eps);
  return g;
}

PhaseGroup quarter_turns() {
  return PhaseGroup::make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

Tract phase_tract(const PhaseGroup& g, std::string name) {
  auto points = std::make_shared<const std::vector<PhasePoint>>(
      [&] {
        std::vector<PhasePoint> v;
        for (ElemId u = 1; u <= ElemId(g.unit_count()); ++u)
          v.push_back(g.point(u));
        return v;
      }());
  NullOracle oracle(
      [points](const FormalSum& s) {
        if (s.empty()) return true;
        std::vector<PhasePoint> expanded;
        for (const auto& t : s.terms())
          for (std::uint32_t k = 0; k < t.mult; ++k)
            expanded.push_back((*points)[t.elem - 1]);
        return contains_zero_positive_combination(expanded);
      },
      std::nullopt, "a positive combination of the phases vanishes");
  return Tract(g.carrier_ptr(), std::move(oracle), std::move(name));
}

Tract weaken(const Pasture& p, std::string name) {
  auto base = std::make_shared<const Pasture>(p);
  NullOracle oracle(
      [base](const FormalSum& s) {
        if (s.norm() >= 4) return true;
        return base->contains(s);
      },
      std::nullopt, "norm-3 null sums plus everything of norm at least 4");
  if (name.empty()) name = "weak(" + p.name() + ")";
  return Tract(p.carrier_ptr(), std::move(oracle), std::move(name));
}

Tract weak_phase_tract(const PhaseGroup& g, std::string name) {
  Pasture p = truncate3(phase_tract(g, name));
  return weaken(p, std::move(name));
}

}  // namespace tractlab
