#include "tractlab/hyperfield.hpp"

#include <algorithm>
#include <set>

#include "tractlab/axiom_checks.hpp"
#include "tractlab/closures.hpp"

namespace tractlab {

namespace {

FormalSum as_sum(const CarrierPtr& c, ElemId e) {
  if (e == 0) return FormalSum(c);
  ElemId arr[1] = {e};
  return FormalSum(c, std::span<const ElemId>(arr, 1));
}

std::string set_str(const Hyperfield& h, const std::vector<ElemId>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += h.carrier().name(elems[i]);
  }
  return out + "}";
}

}  // namespace

bool HypersumSet::contains(ElemId e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

Hyperfield::Hyperfield(std::vector<std::string> names,
                       const std::vector<std::vector<ElemId>>& mul,
                       std::vector<ElemId> neg,
                       std::vector<std::vector<std::vector<ElemId>>> hypersum,
                       ElemId one, std::string name)
    : neg_(std::move(neg)), name_(std::move(name)) {
  const std::size_t n = names.size();
  if (neg_.size() != n) throw std::invalid_argument("negation map has wrong size");
  if (neg_[0] != 0) throw std::invalid_argument("negation must fix zero");
  for (std::size_t i = 1; i < n; ++i)
    if (neg_[i] == 0 || neg_[i] >= n)
      throw std::invalid_argument("negation must send units to units");
  if (one == 0 || one >= n) throw std::invalid_argument("one must be a unit");
  carrier_ = make_carrier(std::move(names), mul, one, neg_[one]);

  if (hypersum.size() != n)
    throw std::invalid_argument("hypersum table has wrong row count");
  table_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a) {
    if (hypersum[a].size() != n)
      throw std::invalid_argument("hypersum table has wrong column count");
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<ElemId> cell = hypersum[a][b];
      for (ElemId e : cell)
        if (e >= n) throw std::invalid_argument("hypersum entry out of range");
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      table_[a * n + b] = std::move(cell);
    }
  }
}

HypersumSet Hyperfield::hypersum(ElemId a, ElemId b) const {
  const std::size_t n = size();
  if (a >= n || b >= n) throw std::invalid_argument("element out of range");
  return HypersumSet{table_[a * n + b]};
}

HypersumSet hypersum_many(const Hyperfield& h, std::span<const ElemId> elems) {
  if (elems.empty()) return HypersumSet{{0}};
  std::set<ElemId> acc{elems[0]};
  for (std::size_t i = 1; i < elems.size(); ++i) {
    std::set<ElemId> next;
    for (ElemId x : acc) {
      HypersumSet s = h.hypersum(x, elems[i]);
      next.insert(s.elems.begin(), s.elems.end());
    }
    acc = std::move(next);
  }
  return HypersumSet{{acc.begin(), acc.end()}};
}

std::vector<AxiomReport> check_hyperfield_axioms(const Hyperfield& h) {
  std::vector<AxiomReport> out;
  const std::size_t n = h.size();
  const CarrierPtr& c = h.carrier_ptr();

  auto fold_left = [&](const HypersumSet& s, ElemId e) {
    std::set<ElemId> acc;
    for (ElemId x : s.elems) {
      HypersumSet t = h.hypersum(x, e);
      acc.insert(t.elems.begin(), t.elems.end());
    }
    return HypersumSet{{acc.begin(), acc.end()}};
  };
  auto fold_right = [&](ElemId e, const HypersumSet& s) {
    std::set<ElemId> acc;
    for (ElemId x : s.elems) {
      HypersumSet t = h.hypersum(e, x);
      acc.insert(t.elems.begin(), t.elems.end());
    }
    return HypersumSet{{acc.begin(), acc.end()}};
  };

  {
    AxiomReport r{.axiom = "HG1"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ++r.cases;
        if (h.hypersum(ElemId(a), ElemId(b)).elems.empty()) {
          ++r.violations;
          r.holds = false;
          if (!r.witness)
            r.witness = Witness{{{"a", as_sum(c, ElemId(a))},
                                 {"b", as_sum(c, ElemId(b))}},
                                "hypersum is empty"};
        }
      }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HG2"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc) {
          ++r.cases;
          HypersumSet left = fold_left(h.hypersum(ElemId(a), ElemId(b)), ElemId(cc));
          HypersumSet right = fold_right(ElemId(a), h.hypersum(ElemId(b), ElemId(cc)));
          if (!(left == right)) {
            ++r.violations;
            r.holds = false;
            if (!r.witness)
              r.witness = Witness{{{"a", as_sum(c, ElemId(a))},
                                   {"b", as_sum(c, ElemId(b))},
                                   {"c", as_sum(c, ElemId(cc))}},
                                  "(a+b)+c = " + set_str(h, left.elems) +
                                      " but a+(b+c) = " + set_str(h, right.elems)};
          }
        }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HG3"};
    for (std::size_t a = 0; a < n; ++a) {
      ++r.cases;
      HypersumSet s = h.hypersum(ElemId(a), 0);
      HypersumSet s2 = h.hypersum(0, ElemId(a));
      std::vector<ElemId> want{ElemId(a)};
      if (s.elems != want || s2.elems != want) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"a", as_sum(c, ElemId(a))}},
                              "a + 0 = " + set_str(h, s.elems)};
      }
    }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HG4"};
    for (std::size_t a = 0; a < n; ++a) {
      ++r.cases;
      std::vector<ElemId> hits;
      for (std::size_t b = 0; b < n; ++b)
        if (h.hypersum(ElemId(a), ElemId(b)).contains_zero())
          hits.push_back(ElemId(b));
      if (hits.size() != 1 || hits[0] != h.neg(ElemId(a))) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"a", as_sum(c, ElemId(a))}},
                              "negatives found: " + set_str(h, hits) +
                                  ", declared: " +
                                  h.carrier().name(h.neg(ElemId(a)))};
      }
    }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HG5"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ++r.cases;
        if (!(h.hypersum(ElemId(a), ElemId(b)) ==
              h.hypersum(ElemId(b), ElemId(a)))) {
          ++r.violations;
          r.holds = false;
          if (!r.witness)
            r.witness = Witness{{{"a", as_sum(c, ElemId(a))},
                                 {"b", as_sum(c, ElemId(b))}},
                                "a + b differs from b + a"};
        }
      }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HG6"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc) {
          ++r.cases;
          if (h.hypersum(ElemId(a), ElemId(b)).contains(ElemId(cc)) &&
              !h.hypersum(ElemId(cc), h.neg(ElemId(a))).contains(ElemId(b))) {
            ++r.violations;
            r.holds = false;
            if (!r.witness)
              r.witness = Witness{{{"a", as_sum(c, ElemId(a))},
                                   {"b", as_sum(c, ElemId(b))},
                                   {"c", as_sum(c, ElemId(cc))}},
                                  "c in a + b but b not in c + (-a)"};
          }
        }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HR3"};
    for (std::size_t a = 0; a < n; ++a) {
      ++r.cases;
      if (h.mul(0, ElemId(a)) != 0 || h.mul(ElemId(a), 0) != 0) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"a", as_sum(c, ElemId(a))}},
                              "0 * a is not 0"};
      }
    }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HR4"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc) {
          ++r.cases;
          HypersumSet bc = h.hypersum(ElemId(b), ElemId(cc));
          std::set<ElemId> left;
          for (ElemId x : bc.elems) left.insert(h.mul(ElemId(a), x));
          HypersumSet right =
              h.hypersum(h.mul(ElemId(a), ElemId(b)), h.mul(ElemId(a), ElemId(cc)));
          std::vector<ElemId> left_v(left.begin(), left.end());
          if (left_v != right.elems) {
            ++r.violations;
            r.holds = false;
            if (!r.witness)
              r.witness = Witness{{{"a", as_sum(c, ElemId(a))},
                                   {"b", as_sum(c, ElemId(b))},
                                   {"c", as_sum(c, ElemId(cc))}},
                                  "a*(b+c) = " + set_str(h, left_v) +
                                      " but a*b + a*c = " +
                                      set_str(h, right.elems)};
          }
        }
    out.push_back(std::move(r));
  }
  return out;
}

AxiomReport check_stringency(const Hyperfield& h) {
  AxiomReport r{.axiom = "STRINGENT"};
  const std::size_t n = h.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (ElemId(b) == h.neg(ElemId(a))) continue;
      ++r.cases;
      HypersumSet s = h.hypersum(ElemId(a), ElemId(b));
      if (s.elems.size() != 1) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"a", as_sum(h.carrier_ptr(), ElemId(a))},
                               {"b", as_sum(h.carrier_ptr(), ElemId(b))}},
                              "a + b = " + set_str(h, s.elems) +
                                  " with b != -a"};
      }
    }
  return r;
}

Tract tract_of(const Hyperfield& h, std::optional<int> bound) {
  auto shared = std::make_shared<const Hyperfield>(h);
  NullOracle oracle(
      [shared](const FormalSum& s) {
        std::vector<ElemId> elems = s.elements();
        return hypersum_many(*shared, elems).contains_zero();
      },
      bound, "0 lies in the iterated hypersum");
  return Tract(h.carrier_ptr(), std::move(oracle), h.name());
}

Pasture pasture_of(const Hyperfield& h) { return truncate3(tract_of(h)); }

AxiomReport check_hap(const Hyperfield& h, int bound) {
  AxiomReport r{.axiom = "HAP", .bound_checked = bound};
  Tract full = tract_of(h);
  Tract closed = fusion_closure(pasture_of(h), bound);
  r.cases = std::uint64_t(enumerate_sums(h.carrier_ptr(), bound).size());
  std::vector<FormalSum> diffs = oracle_disagreements(closed, full, bound);
  r.violations = diffs.size();
  if (!diffs.empty()) {
    r.holds = false;
    const FormalSum& d = diffs.front();
    r.witness = Witness{{{"sum", d}},
                        closed.is_null(d)
                            ? "in the fusion closure but not hypersum-null"
                            : "hypersum-null but outside the fusion closure"};
  }
  return r;
}

std::vector<AxiomReport> check_stringency_equivalence(const Hyperfield& h,
                                                      int sf_bound,
                                                      int max_len) {
  std::vector<AxiomReport> out;
  AxiomReport stringent = check_stringency(h);
  AxiomReport sf = check_strong_fusion(tract_of(h), sf_bound);
  {
    AxiomReport r{.axiom = "STRINGENT-VS-SF", .bound_checked = sf_bound};
    r.cases = stringent.cases + sf.cases;
    r.holds = stringent.holds == sf.holds;
    std::string note = std::string("stringent=") +
                       (stringent.holds ? "true" : "false") +
                       ", SF=" + (sf.holds ? "true" : "false");
    if (!r.holds) {
      r.violations = 1;
      r.witness = Witness{{}, note};
    } else {
      r.witness = std::nullopt;
    }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "HYPERSUM-SINGLETON", .bound_checked = max_len};
    for (const FormalSum& s : enumerate_sums(h.carrier_ptr(), max_len, 2)) {
      ++r.cases;
      std::vector<ElemId> elems = s.elements();
      HypersumSet fold = hypersum_many(h, elems);
      if (!fold.contains_zero() && fold.elems.size() != 1) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{{"terms", s}},
                              "zero-free hypersum " + set_str(h, fold.elems) +
                                  " is not a singleton"};
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Hyperfield make_sign_hyperfield() {
  // elements 0, 1, -1
  std::vector<std::string> names{"0", "1", "-1"};
  std::vector<std::vector<ElemId>> mul{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  std::vector<ElemId> neg{0, 2, 1};
  auto cell = [](std::initializer_list<ElemId> xs) {
    return std::vector<ElemId>(xs);
  };
  std::vector<std::vector<std::vector<ElemId>>> table{
      {cell({0}), cell({1}), cell({2})},
      {cell({1}), cell({1}), cell({0, 1, 2})},
      {cell({2}), cell({0, 1, 2}), cell({2})}};
  return Hyperfield(std::move(names), mul, std::move(neg), std::move(table), 1,
                    "sign");
}

Hyperfield make_field_hyperfield(int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be prime");
  const std::size_t n = std::size_t(p);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<std::vector<ElemId>> mul(n, std::vector<ElemId>(n));
  std::vector<ElemId> neg(n);
  std::vector<std::vector<std::vector<ElemId>>> table(
      n, std::vector<std::vector<ElemId>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = ElemId((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) {
      mul[a][b] = ElemId((a * b) % n);
      table[a][b] = {ElemId((a + b) % n)};
    }
  }
  return Hyperfield(std::move(names), mul, std::move(neg), std::move(table), 1,
                    "gf" + std::to_string(p));
}

Hyperfield make_product_hyperfield(const Hyperfield& a, const Hyperfield& b,
                                   std::string name) {
  const std::size_t ua = a.size() - 1;
  const std::size_t ub = b.size() - 1;
  const std::size_t n = 1 + ua * ub;
  if (n > 256) throw std::invalid_argument("product carrier too large");
  if (name.empty()) name = a.name() + "x" + b.name();

  // unit (i, j) lives at id 1 + (i-1)*ub + (j-1)
  auto pack = [&](ElemId i, ElemId j) {
    return ElemId(1 + (std::size_t(i) - 1) * ub + (std::size_t(j) - 1));
  };
  std::vector<std::string> names(n);
  names[0] = "0";
  for (ElemId i = 1; i <= ElemId(ua); ++i)
    for (ElemId j = 1; j <= ElemId(ub); ++j)
      names[pack(i, j)] =
          "(" + a.carrier().name(i) + "," + b.carrier().name(j) + ")";

  std::vector<std::vector<ElemId>> mul(n, std::vector<ElemId>(n, 0));
  std::vector<ElemId> neg(n, 0);
  for (ElemId i = 1; i <= ElemId(ua); ++i)
    for (ElemId j = 1; j <= ElemId(ub); ++j) {
      ElemId x = pack(i, j);
      neg[x] = pack(a.neg(i), b.neg(j));
      for (ElemId k = 1; k <= ElemId(ua); ++k)
        for (ElemId l = 1; l <= ElemId(ub); ++l)
          mul[x][pack(k, l)] = pack(a.mul(i, k), b.mul(j, l));
    }

  std::vector<std::vector<std::vector<ElemId>>> table(
      n, std::vector<std::vector<ElemId>>(n));
  table[0][0] = {0};
  for (std::size_t x = 1; x < n; ++x) {
    table[0][x] = {ElemId(x)};
    table[x][0] = {ElemId(x)};
  }
  for (ElemId i = 1; i <= ElemId(ua); ++i)
    for (ElemId j = 1; j <= ElemId(ub); ++j)
      for (ElemId k = 1; k <= ElemId(ua); ++k)
        for (ElemId l = 1; l <= ElemId(ub); ++l) {
          std::vector<ElemId> cell;
          HypersumSet sa = a.hypersum(i, k);
          HypersumSet sb = b.hypersum(j, l);
          for (ElemId u : sa.elems) {
            if (u == 0) continue;
            for (ElemId v : sb.elems) {
              if (v == 0) continue;
              cell.push_back(pack(u, v));
            }
          }
          if (k == a.neg(i) && l == b.neg(j)) cell.push_back(0);
          table[pack(i, j)][pack(k, l)] = std::move(cell);
        }

  return Hyperfield(std::move(names), mul, std::move(neg), std::move(table),
                    pack(a.one(), b.one()), std::move(name));
}

}  // namespace tractlab
