#include "tractlab/axiom_checks.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "tractlab/parallel.hpp"

namespace tractlab {

namespace {

FormalSum single(const Tract& t, ElemId e) {
  if (e == 0) return t.empty_sum();
  ElemId arr[1] = {e};
  return FormalSum(t.carrier_ptr(), std::span<const ElemId>(arr, 1));
}

int effective_bound(const Tract& t, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (t.bound() && *t.bound() < bound) throw BoundError(bound, *t.bound());
  return bound;
}

}  // namespace

AxiomReport check_t1(const Tract& t) {
  AxiomReport r{.axiom = "T1", .bound_checked = 1};
  if (!t.is_null(t.empty_sum())) {
    r.holds = false;
    r.violations = 1;
    r.witness = Witness{{{"sum", t.empty_sum()}}, "empty sum is not null"};
  }
  ++r.cases;
  for (std::size_t u = 1; u < t.carrier().size() && r.holds; ++u) {
    ++r.cases;
    FormalSum s = single(t, ElemId(u));
    if (t.is_null(s)) {
      r.holds = false;
      r.violations = 1;
      r.witness = Witness{{{"sum", s}}, "a single unit is null"};
    }
  }
  return r;
}

AxiomReport check_t2(const Tract& t) {
  AxiomReport r{.axiom = "T2", .bound_checked = 2};
  std::vector<ElemId> hits;
  for (std::size_t u = 1; u < t.carrier().size(); ++u) {
    ++r.cases;
    FormalSum s(t.carrier_ptr(), {t.carrier().one(), ElemId(u)});
    if (t.is_null(s)) hits.push_back(ElemId(u));
  }
  const ElemId eps = t.carrier().epsilon();
  if (hits.size() != 1 || hits[0] != eps) {
    r.holds = false;
    r.violations = 1;
    Witness w;
    w.parts.emplace_back("expected",
                         FormalSum(t.carrier_ptr(), {t.carrier().one(), eps}));
    for (ElemId u : hits)
      w.parts.emplace_back("null",
                           FormalSum(t.carrier_ptr(), {t.carrier().one(), u}));
    w.note = hits.empty() ? "no unit u with 1 + u null"
             : hits.size() > 1
                 ? "several units u with 1 + u null"
                 : "the unit with 1 + u null is not the designated epsilon";
    r.witness = std::move(w);
  }
  return r;
}

AxiomReport check_t3(const Tract& t, int bound) {
  AxiomReport r{.axiom = "T3", .bound_checked = effective_bound(t, bound)};
  auto sums = enumerate_sums(t.carrier_ptr(), bound);
  for (const FormalSum& a : sums) {
    bool a_null = t.is_null(a);
    for (std::size_t u = 1; u < t.carrier().size(); ++u) {
      ++r.cases;
      FormalSum b = a.scaled(ElemId(u));
      if (t.is_null(b) != a_null) {
        ++r.violations;
        if (!r.witness)
          r.witness = Witness{{{"sum", a}, {"unit", single(t, ElemId(u))}},
                              "null status changes under unit scaling"};
        r.holds = false;
      }
    }
  }
  return r;
}

std::vector<AxiomReport> check_tract_axioms(const Tract& t, int bound) {
  return {check_t1(t), check_t2(t), check_t3(t, bound)};
}

AxiomReport check_idyll(const Tract& t, int bound) {
  AxiomReport r{.axiom = "I", .bound_checked = effective_bound(t, bound)};
  auto sums = enumerate_sums(t.carrier_ptr(), bound);
  std::vector<const FormalSum*> null_sums;
  for (const FormalSum& s : sums)
    if (t.is_null(s)) null_sums.push_back(&s);
  for (std::size_t i = 0; i < null_sums.size(); ++i)
    for (std::size_t j = i; j < null_sums.size(); ++j) {
      const FormalSum& a = *null_sums[i];
      const FormalSum& b = *null_sums[j];
      if (a.norm() + b.norm() > bound) continue;
      ++r.cases;
      FormalSum s = a + b;
      if (!t.is_null(s)) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"alpha", a}, {"beta", b}, {"sum", s}},
                              "sum of null sums is not null"};
      }
    }
  return r;
}

AxiomReport check_fusion(const Tract& t, int bound) {
  AxiomReport r{.axiom = "F", .bound_checked = effective_bound(t, bound)};
  auto sums = enumerate_sums(t.carrier_ptr(), bound);
  using Key = std::tuple<int, FormalSum, FormalSum, int>;
  std::optional<Key> best;
  for (const FormalSum& a : sums) {
    for (const FormalSum& b : sums) {
      if (a.norm() + b.norm() > bound) continue;
      FormalSum ab = a + b;
      bool ab_null = t.is_null(ab);
      for (std::size_t z = 0; z < t.carrier().size(); ++z) {
        if (z != 0 && (a.norm() + 1 > bound || b.norm() + 1 > bound)) continue;
        ++r.cases;
        if (ab_null) continue;
        FormalSum az = z == 0 ? a : a + single(t, ElemId(z));
        if (!t.is_null(az)) continue;
        FormalSum bz = z == 0
                           ? b
                           : b + single(t, t.carrier().mul(t.carrier().epsilon(),
                                                           ElemId(z)));
        if (!t.is_null(bz)) continue;
        ++r.violations;
        r.holds = false;
        Key key{ab.norm(), a, b, int(z)};
        if (!best || key < *best) {
          best = key;
          r.witness = Witness{{{"alpha", a},
                               {"beta", b},
                               {"z", single(t, ElemId(z))},
                               {"sum", ab}},
                              "premises null but alpha + beta is not"};
        }
      }
    }
  }
  return r;
}

namespace {

struct FusionScanResult {
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<std::tuple<int, int, FormalSum, FormalSum, FormalSum>> key;
  std::optional<Witness> witness;
};

// Shared engine for SF and MSF.  Scans alpha (outer, parallelizable),
// beta, gamma with norm(alpha + beta) <= bound, norm(gamma) <= bound - 2,
// and both premises within the bound.  The reported witness minimizes
// (norm(alpha + beta), norm(gamma), alpha, beta, gamma).
AxiomReport run_fusion_scan(const Tract& t, int bound, int jobs, bool msf_only,
                            const char* axiom) {
  AxiomReport r{.axiom = axiom, .bound_checked = bound};
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (t.bound() && *t.bound() < bound) throw BoundError(bound, *t.bound());
  auto sums = enumerate_sums(t.carrier_ptr(), bound);
  const ElemId eps = t.carrier().epsilon();

  std::vector<FusionScanResult> partial(std::size_t(std::max(1, jobs)));
  parallel_chunks(sums.size(), jobs, [&](int chunk, std::size_t lo,
                                         std::size_t hi) {
    FusionScanResult& acc = partial[std::size_t(chunk)];
    for (std::size_t ia = lo; ia < hi; ++ia) {
      const FormalSum& a = sums[ia];
      for (const FormalSum& b : sums) {
        if (a.norm() + b.norm() > bound) continue;
        FormalSum ab = a + b;
        bool conclusion_needed = !msf_only || ab.norm() >= 4;
        bool ab_null = t.is_null(ab);
        int gcap = std::min({bound - 2, bound - a.norm(), bound - b.norm()});
        for (const FormalSum& g : sums) {
          if (g.norm() > gcap) break;  // sums are sorted by norm
          ++acc.cases;
          if (ab_null || !conclusion_needed) continue;
          if (!g.empty() && t.is_null(g)) continue;  // gamma must be 0 or non-null
          if (!t.is_null(a + g)) continue;
          if (!t.is_null(b + g.scaled(eps))) continue;
          ++acc.violations;
          std::tuple<int, int, FormalSum, FormalSum, FormalSum> key{
              ab.norm(), g.norm(), a, b, g};
          if (!acc.key || key < *acc.key) {
            acc.key = key;
            acc.witness =
                Witness{{{"alpha", a}, {"beta", b}, {"gamma", g}, {"sum", ab}},
                        "premises null but alpha + beta is not"};
          }
        }
      }
    }
  });

  std::optional<std::tuple<int, int, FormalSum, FormalSum, FormalSum>> best;
  for (auto& acc : partial) {
    r.cases += acc.cases;
    r.violations += acc.violations;
    if (acc.key && (!best || *acc.key < *best)) {
      best = acc.key;
      r.witness = acc.witness;
    }
  }
  r.holds = r.violations == 0;
  return r;
}

}  // namespace

AxiomReport check_strong_fusion(const Tract& t, int bound, int jobs) {
  return run_fusion_scan(t, bound, resolve_jobs(jobs), false, "SF");
}

AxiomReport check_msf(const Tract& t, int bound, int jobs) {
  return run_fusion_scan(t, bound, resolve_jobs(jobs), true, "MSF");
}

bool is_fusion_violation(const Tract& t, const FormalSum& alpha,
                         const FormalSum& beta, const FormalSum& gamma,
                         bool msf_only) {
  FormalSum ab = alpha + beta;
  if (msf_only && ab.norm() < 4) return false;
  if (!gamma.empty() && t.is_null(gamma)) return false;
  if (!t.is_null(alpha + gamma)) return false;
  if (!t.is_null(beta + gamma.negated())) return false;
  return !t.is_null(ab);
}

AxiomReport check_msf_prime(const Tract& t, int bound) {
  AxiomReport r{.axiom = "MSF'", .bound_checked = effective_bound(t, bound)};
  auto sums = enumerate_sums(t.carrier_ptr(), bound);
  const ElemId eps = t.carrier().epsilon();
  for (const FormalSum& g : sums) {
    if (g.empty() || t.is_null(g)) continue;
    for (const FormalSum& b : sums) {
      if (b.empty() || b.norm() * g.norm() > bound) continue;
      FormalSum bg = b * g;
      for (const FormalSum& a : sums) {
        if (a.norm() + bg.norm() > bound) continue;
        if (!t.is_null(a + bg)) continue;
        for (const FormalSum& d : sums) {
          if (d.norm() + g.norm() > bound) continue;
          if (a.norm() + b.norm() * d.norm() > bound) continue;
          ++r.cases;
          if (!t.is_null(d + g.scaled(eps))) continue;
          FormalSum abd = a + b * d;
          if (abd.norm() < 4) continue;
          if (!t.is_null(abd)) {
            ++r.violations;
            r.holds = false;
            if (!r.witness)
              r.witness = Witness{
                  {{"alpha", a}, {"beta", b}, {"gamma", g}, {"delta", d}},
                  "alpha + beta*delta has norm >= 4 but is not null"};
          }
        }
      }
    }
  }
  return r;
}

AxiomReport check_sum_prime(const Tract& t, int n, int bound) {
  if (n < 2) throw std::invalid_argument("need at least two summands");
  AxiomReport r{.axiom = "SUM'", .bound_checked = effective_bound(t, bound)};
  auto sums = enumerate_sums(t.carrier_ptr(), bound);

  std::vector<const FormalSum*> tuple(static_cast<std::size_t>(n), nullptr);

  // combinations with replacement over the (norm, lex)-ordered sum list
  std::function<void(int, std::size_t, int)> rec = [&](int pos, std::size_t least,
                                                       int norm_left) {
    if (pos == n) {
      ++r.cases;
      // premises: every subset of size n-1 and n-2 sums to null
      FormalSum total = t.empty_sum();
      for (const FormalSum* s : tuple) total = total + *s;
      for (std::size_t skip = 0; skip < std::size_t(n); ++skip) {
        FormalSum part = t.empty_sum();
        for (std::size_t k = 0; k < std::size_t(n); ++k)
          if (k != skip) part = part + *tuple[k];
        if (!t.is_null(part)) return;
      }
      for (std::size_t s1 = 0; s1 < std::size_t(n); ++s1)
        for (std::size_t s2 = s1 + 1; s2 < std::size_t(n); ++s2) {
          FormalSum part = t.empty_sum();
          for (std::size_t k = 0; k < std::size_t(n); ++k)
            if (k != s1 && k != s2) part = part + *tuple[k];
          if (!t.is_null(part)) return;
        }
      if (!t.is_null(total)) {
        ++r.violations;
        r.holds = false;
        if (!r.witness) {
          Witness w;
          for (std::size_t k = 0; k < std::size_t(n); ++k)
            w.parts.emplace_back("X" + std::to_string(k + 1), *tuple[k]);
          w.parts.emplace_back("sum", total);
          w.note = "all near-subset sums null but the total is not";
          r.witness = std::move(w);
        }
      }
      return;
    }
    for (std::size_t i = least; i < sums.size(); ++i) {
      if (sums[i].norm() > norm_left) break;
      tuple[std::size_t(pos)] = &sums[i];
      rec(pos + 1, i, norm_left - sums[i].norm());
    }
  };
  rec(0, 0, bound);
  return r;
}

AxiomReport check_morphism(const Morphism& m, int bound) {
  AxiomReport r{.axiom = "MORPHISM", .bound_checked = bound};
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (m.source.bound() && *m.source.bound() < bound)
    throw BoundError(bound, *m.source.bound());
  if (m.target.bound() && *m.target.bound() < bound)
    throw BoundError(bound, *m.target.bound());
  auto sums = enumerate_sums(m.source.carrier_ptr(), bound);
  for (const FormalSum& s : sums) {
    ++r.cases;
    if (!m.source.is_null(s)) continue;
    std::vector<ElemId> mapped;
    mapped.reserve(std::size_t(s.norm()));
    for (const auto& term : s.terms())
      for (std::uint32_t k = 0; k < term.mult; ++k)
        mapped.push_back(m.map[term.elem]);
    FormalSum image(m.target.carrier_ptr(), std::span<const ElemId>(mapped));
    if (!m.target.is_null(image)) {
      ++r.violations;
      r.holds = false;
      if (!r.witness)
        r.witness = Witness{{{"source", s}, {"image", image}},
                            "null sum maps to a non-null sum"};
    }
  }
  return r;
}

}  // namespace tractlab
