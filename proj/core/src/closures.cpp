#include "tractlab/closures.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace tractlab {

namespace {

int require_oracle_covers(const Tract& t, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (t.bound() && *t.bound() < bound) throw BoundError(bound, *t.bound());
  return bound;
}

FormalSum remove_one(const FormalSum& s, ElemId elem) {
  std::vector<ElemId> elems = s.elements();
  auto it = std::find(elems.begin(), elems.end(), elem);
  if (it == elems.end())
    throw std::invalid_argument("element not present in formal sum");
  elems.erase(it);
  return FormalSum(s.carrier_ptr(), std::span<const ElemId>(elems));
}

// inserts s and its whole unit orbit; true if anything was new
bool insert_orbit(std::set<FormalSum>& dst, const FormalSum& s) {
  bool added = false;
  for (std::size_t u = 1; u < s.carrier().size(); ++u)
    added |= dst.insert(s.scaled(ElemId(u))).second;
  return added;
}

Tract tract_from_set(CarrierPtr carrier, std::set<FormalSum> members,
                     int bound, std::string name, std::string description) {
  auto shared = std::make_shared<const std::set<FormalSum>>(std::move(members));
  NullOracle oracle(
      [shared](const FormalSum& a) { return shared->count(a) > 0; }, bound,
      std::move(description));
  return Tract(std::move(carrier), std::move(oracle), std::move(name));
}

}  // namespace

Pasture truncate3(const Tract& t) {
  if (t.bound() && *t.bound() < 3) throw BoundError(3, *t.bound());
  std::vector<FormalSum> members;
  for (const FormalSum& s : enumerate_sums(t.carrier_ptr(), 3))
    if (t.is_null(s)) members.push_back(s);
  return Pasture(t.carrier_ptr(), std::move(members), t.name());
}

std::vector<FormalSum> closure_members(const Tract& t, int bound) {
  require_oracle_covers(t, bound);
  std::vector<FormalSum> out;
  for (const FormalSum& s : enumerate_sums(t.carrier_ptr(), bound))
    if (t.is_null(s)) out.push_back(s);
  return out;
}

std::vector<FormalSum> oracle_disagreements(const Tract& a, const Tract& b,
                                            int bound) {
  if (!a.carrier().same_structure(b.carrier()))
    throw std::invalid_argument("oracles live over different carriers");
  require_oracle_covers(a, bound);
  require_oracle_covers(b, bound);
  std::vector<FormalSum> out;
  for (const FormalSum& s : enumerate_sums(a.carrier_ptr(), bound)) {
    FormalSum over_b(b.carrier_ptr(), std::span<const ElemId>(s.elements()));
    if (a.is_null(s) != b.is_null(over_b)) out.push_back(s);
  }
  return out;
}

Tract fusion_closure(const Pasture& p, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const ElemId eps = p.carrier().epsilon();
  std::set<FormalSum> members(p.null_sums().begin(), p.null_sums().end());

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<FormalSum> snapshot(members.begin(), members.end());
    for (const FormalSum& P : snapshot) {
      for (const FormalSum& Q : snapshot) {
        // z = 0: both alpha = P and beta = Q are null
        if (P.norm() + Q.norm() <= bound)
          changed |= insert_orbit(members, P + Q);
        // z a unit: alpha + z = P, beta - z = Q
        for (const auto& term : P.terms()) {
          ElemId z = term.elem;
          ElemId neg_z = p.carrier().mul(eps, z);
          bool q_has = false;
          for (const auto& qt : Q.terms())
            if (qt.elem == neg_z) {
              q_has = true;
              break;
            }
          if (!q_has) continue;
          FormalSum alpha = remove_one(P, z);
          FormalSum beta = remove_one(Q, neg_z);
          if (alpha.norm() + beta.norm() <= bound)
            changed |= insert_orbit(members, alpha + beta);
        }
      }
    }
  }

  return tract_from_set(p.carrier_ptr(), std::move(members), bound,
                        "closure(" + p.name() + ")",
                        "fusion closure up to norm " + std::to_string(bound));
}

namespace {

// nonempty sub-multisets of s, each paired with its negation
std::vector<FormalSum> sub_multisets(const FormalSum& s) {
  std::vector<FormalSum> out;
  const auto& terms = s.terms();
  std::vector<std::uint32_t> take(terms.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < terms.size() && take[i] == terms[i].mult) {
      take[i] = 0;
      ++i;
    }
    if (i == terms.size()) break;
    ++take[i];
    std::vector<ElemId> elems;
    for (std::size_t k = 0; k < terms.size(); ++k)
      for (std::uint32_t c = 0; c < take[k]; ++c) elems.push_back(terms[k].elem);
    out.emplace_back(s.carrier_ptr(), std::span<const ElemId>(elems));
  }
  return out;
}

bool is_sub_multiset(const FormalSum& small, const FormalSum& big) {
  std::size_t j = 0;
  for (const auto& t : small.terms()) {
    while (j < big.terms().size() && big.terms()[j].elem < t.elem) ++j;
    if (j == big.terms().size() || big.terms()[j].elem != t.elem ||
        big.terms()[j].mult < t.mult)
      return false;
  }
  return true;
}

FormalSum subtract(const FormalSum& big, const FormalSum& small) {
  std::vector<ElemId> elems = big.elements();
  for (ElemId e : small.elements()) {
    auto it = std::find(elems.begin(), elems.end(), e);
    elems.erase(it);
  }
  return FormalSum(big.carrier_ptr(), std::span<const ElemId>(elems));
}

}  // namespace

Tract sigma_closure(const Tract& t, int bound) {
  require_oracle_covers(t, bound);
  std::set<FormalSum> members;
  for (const FormalSum& s : closure_members(t, bound)) members.insert(s);

  // Stage iteration: each pass reads only the previous stage, so the gamma
  // non-membership test is taken against a frozen set.
  bool changed = true;
  while (changed) {
    std::vector<FormalSum> snapshot(members.begin(), members.end());
    std::set<FormalSum> stage(members);
    std::set<FormalSum> next(members);
    changed = false;

    for (const FormalSum& P : snapshot) {
      std::vector<FormalSum> gammas = sub_multisets(P);
      for (const FormalSum& Q : snapshot) {
        // rule 1: alpha, beta both in the stage set
        FormalSum s1 = P + Q;
        if (s1.norm() >= 4 && s1.norm() <= bound)
          changed |= insert_orbit(next, s1);
        // rule 2: alpha + gamma = P, beta - gamma = Q, gamma outside the
        // stage set
        for (const FormalSum& g : gammas) {
          if (stage.count(g)) continue;
          FormalSum neg_g = g.negated();
          if (!is_sub_multiset(neg_g, Q)) continue;
          FormalSum alpha = subtract(P, g);
          FormalSum beta = subtract(Q, neg_g);
          FormalSum s2 = alpha + beta;
          if (s2.norm() >= 4 && s2.norm() <= bound)
            changed |= insert_orbit(next, s2);
        }
      }
    }
    members = std::move(next);
  }

  return tract_from_set(
      t.carrier_ptr(), std::move(members), bound, "sigma(" + t.name() + ")",
      "strong-fusion saturation up to norm " + std::to_string(bound));
}

}  // namespace tractlab
