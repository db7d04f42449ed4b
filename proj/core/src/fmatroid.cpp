#include "tractlab/fmatroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tractlab {

namespace {

FormalSum sum_of(const CarrierPtr& c, ElemId e) {
  if (e == 0) return FormalSum(c);
  ElemId arr[1] = {e};
  return FormalSum(c, std::span<const ElemId>(arr, 1));
}

}  // namespace

std::uint32_t FVector::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) m |= 1u << i;
  return m;
}

FVector FVector::scaled(ElemId unit) const {
  FVector out{carrier, values};
  for (ElemId& v : out.values)
    if (v != 0) v = carrier->mul(unit, v);
  return out;
}

std::string FVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += carrier->name(values[i]);
  }
  return out + ")";
}

bool operator==(const FVector& a, const FVector& b) {
  return a.values == b.values &&
         (a.carrier == b.carrier || a.carrier->same_structure(*b.carrier));
}

std::uint32_t GenVector::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].empty()) m |= 1u << i;
  return m;
}

std::string GenVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].str();
  }
  return out + ")";
}

bool operator==(const GenVector& a, const GenVector& b) {
  return a.coords == b.coords;
}

GenVector as_gen_vector(const FVector& v) {
  GenVector out{v.carrier, {}};
  out.coords.reserve(v.values.size());
  for (ElemId e : v.values) out.coords.push_back(sum_of(v.carrier, e));
  return out;
}

FormalSum inner_product(const Tract& t, const GenVector& x, const GenVector& y) {
  if (x.coords.size() != y.coords.size())
    throw std::invalid_argument("inner product needs matching ground sets");
  FormalSum acc = t.empty_sum();
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].empty() || y.coords[i].empty()) continue;
    acc = acc + x.coords[i] * t.involution().apply(y.coords[i]);
  }
  return acc;
}

bool is_orthogonal(const Tract& t, const GenVector& x, const GenVector& y) {
  return t.is_null(inner_product(t, x, y));
}

std::vector<AxiomReport> check_f_signature(const FSignature& sig) {
  std::vector<AxiomReport> out;
  const auto& reps = sig.reps;
  {
    AxiomReport r{.axiom = "C0"};
    for (const FVector& v : reps) {
      ++r.cases;
      if (v.support_mask() == 0) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{{}, "zero vector among the representatives"};
      }
    }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "C1"};
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        ++r.cases;
        if (!reps[i].carrier->same_structure(*reps[j].carrier)) continue;
        bool proportional = false;
        for (std::size_t u = 1; u < reps[i].carrier->size() && !proportional; ++u)
          proportional = reps[i].scaled(ElemId(u)).values == reps[j].values;
        if (proportional) {
          ++r.violations;
          r.holds = false;
          if (!r.witness)
            r.witness = Witness{{}, "representatives " + reps[i].str() + " and " +
                                        reps[j].str() + " lie in one orbit"};
        }
      }
    out.push_back(std::move(r));
  }
  {
    AxiomReport r{.axiom = "C2"};
    const auto& masks = sig.matroid.circuit_masks();
    std::map<std::uint32_t, int> seen;
    for (const FVector& v : reps) ++seen[v.support_mask()];
    for (std::uint32_t m : masks) {
      ++r.cases;
      auto it = seen.find(m);
      if (it == seen.end() || it->second != 1) {
        ++r.violations;
        r.holds = false;
        if (!r.witness) {
          std::string supp = "{";
          bool first = true;
          for (std::size_t i = 0; i < sig.matroid.ground_size(); ++i)
            if ((m >> i) & 1) {
              if (!first) supp += ",";
              supp += sig.matroid.ground()[i];
              first = false;
            }
          supp += "}";
          r.witness = Witness{{}, (it == seen.end()
                                       ? "circuit " + supp + " has no representative"
                                       : "circuit " + supp +
                                             " has several representatives")};
        }
      }
    }
    for (const FVector& v : reps) {
      ++r.cases;
      if (v.support_mask() != 0 &&
          std::find(masks.begin(), masks.end(), v.support_mask()) == masks.end()) {
        ++r.violations;
        r.holds = false;
        if (!r.witness)
          r.witness = Witness{
              {}, "support of " + v.str() + " is not a circuit of the matroid"};
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

FMatroid::FMatroid(Matroid matroid, Tract tract,
                   std::vector<FVector> circuit_reps,
                   std::vector<FVector> cocircuit_reps)
    : matroid_(std::move(matroid)),
      dual_(matroid_.dual()),
      tract_(std::move(tract)),
      circuit_reps_(std::move(circuit_reps)),
      cocircuit_reps_(std::move(cocircuit_reps)) {
  for (const FVector& v : circuit_reps_)
    if (v.values.size() != matroid_.ground_size())
      throw std::invalid_argument("circuit representative has wrong length");
  for (const FVector& v : cocircuit_reps_)
    if (v.values.size() != matroid_.ground_size())
      throw std::invalid_argument("cocircuit representative has wrong length");
  for (const FVector& v : circuit_reps_)
    if (!v.carrier->same_structure(tract_.carrier()))
      throw std::invalid_argument("representative carrier mismatch");
  for (const FVector& v : cocircuit_reps_)
    if (!v.carrier->same_structure(tract_.carrier()))
      throw std::invalid_argument("representative carrier mismatch");
}

FMatroid FMatroid::dual() const {
  return FMatroid(dual_, tract_, cocircuit_reps_, circuit_reps_);
}

std::vector<AxiomReport> check_dual_pair(const FMatroid& fm) {
  std::vector<AxiomReport> out;
  auto fold = [](const char* axiom, std::vector<AxiomReport> sub) {
    AxiomReport r{.axiom = axiom};
    for (const AxiomReport& s : sub) {
      r.cases += s.cases;
      r.violations += s.violations;
      if (!s.holds && r.holds) {
        r.holds = false;
        r.witness = s.witness;
        if (r.witness)
          r.witness->note = s.axiom + (r.witness->note.empty()
                                           ? " fails"
                                           : " fails: " + r.witness->note);
      }
    }
    return r;
  };
  out.push_back(fold("DP1", check_f_signature(fm.circuit_signature())));
  out.push_back(fold("DP2", check_f_signature(fm.cocircuit_signature())));

  AxiomReport dp3{.axiom = "DP3"};
  for (const FVector& c : fm.circuit_reps())
    for (const FVector& d : fm.cocircuit_reps()) {
      ++dp3.cases;
      FormalSum s = inner_product(fm.tract(), as_gen_vector(c), as_gen_vector(d));
      if (!fm.tract().is_null(s)) {
        ++dp3.violations;
        dp3.holds = false;
        if (!dp3.witness)
          dp3.witness = Witness{{{"inner", s}},
                                "C=" + c.str() + ", D=" + d.str()};
      }
    }
  out.push_back(std::move(dp3));
  return out;
}

namespace {

std::vector<GenVector> gen_side(const FMatroid& fm, int coord_bound,
                                const std::vector<FVector>& against) {
  if (coord_bound < 0) throw std::invalid_argument("coord bound must be nonnegative");
  const CarrierPtr& carrier = fm.tract().carrier_ptr();
  std::vector<GenVector> opposite;
  opposite.reserve(against.size());
  for (const FVector& v : against) opposite.push_back(as_gen_vector(v));

  const std::size_t n = fm.matroid().ground_size();
  std::vector<FormalSum> options = enumerate_sums(carrier, coord_bound);
  std::vector<std::size_t> idx(n, 0);
  std::vector<GenVector> out;
  while (true) {
    GenVector cand{carrier, {}};
    cand.coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cand.coords.push_back(options[idx[i]]);
    bool ok = true;
    for (const GenVector& rep : opposite)
      if (!is_orthogonal(fm.tract(), cand, rep)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(cand));
    // odometer, last coordinate fastest
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++idx[p] < options.size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::vector<GenVector> gen_vectors(const FMatroid& fm, int coord_bound) {
  return gen_side(fm, coord_bound, fm.cocircuit_reps());
}

std::vector<GenVector> gen_covectors(const FMatroid& fm, int coord_bound) {
  return gen_side(fm, coord_bound, fm.circuit_reps());
}

namespace {

std::vector<FVector> to_fvectors(const std::vector<GenVector>& gens) {
  std::vector<FVector> out;
  out.reserve(gens.size());
  for (const GenVector& g : gens) {
    FVector v{g.carrier, {}};
    v.values.reserve(g.coords.size());
    for (const FormalSum& s : g.coords)
      v.values.push_back(s.empty() ? ElemId(0) : s.terms()[0].elem);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<FVector> vectors(const FMatroid& fm) {
  return to_fvectors(gen_vectors(fm, 1));
}

std::vector<FVector> covectors(const FMatroid& fm) {
  return to_fvectors(gen_covectors(fm, 1));
}

GenVector wedge(const Tract& t, const GenVector& x, const GenVector& y,
                std::size_t e) {
  if (x.coords.size() != y.coords.size())
    throw std::invalid_argument("wedge needs matching ground sets");
  if (e >= x.coords.size()) throw std::invalid_argument("wedge index out of range");
  GenVector out{x.carrier, {}};
  out.coords.reserve(x.coords.size());
  for (std::size_t f = 0; f < x.coords.size(); ++f) {
    if (f == e) {
      out.coords.push_back(t.empty_sum());
      continue;
    }
    FormalSum first = y.coords[e] * x.coords[f];
    FormalSum second = (x.coords[e] * y.coords[f]).negated();
    out.coords.push_back(first + second);
  }
  return out;
}

namespace {

struct LabeledVector {
  std::uint32_t support;
  std::map<std::string, ElemId> values;  // label -> nonzero value
};

// rebuilds an FMatroid from labeled circuit/cocircuit data, aligning the
// representative order with the canonical circuit order on each side
FMatroid assemble(const Tract& t, std::vector<std::string> ground,
                  const std::vector<std::map<std::string, ElemId>>& circuit_vals,
                  const std::vector<std::map<std::string, ElemId>>& cocircuit_vals) {
  std::vector<std::vector<std::string>> circuit_supports;
  for (const auto& vals : circuit_vals) {
    std::vector<std::string> s;
    for (const auto& [label, value] : vals)
      if (value != 0) s.push_back(label);
    circuit_supports.push_back(std::move(s));
  }
  Matroid m = Matroid::from_circuits(ground, circuit_supports);

  auto build_side = [&](const Matroid& side,
                        const std::vector<std::map<std::string, ElemId>>& vals) {
    std::vector<FVector> reps;
    for (std::uint32_t mask : side.circuit_masks()) {
      const std::map<std::string, ElemId>* found = nullptr;
      for (const auto& v : vals) {
        std::uint32_t vm = 0;
        for (const auto& [label, value] : v)
          if (value != 0) vm |= 1u << side.element_index(label);
        if (vm == mask) {
          found = &v;
          break;
        }
      }
      if (!found) throw std::logic_error("missing representative for a circuit");
      FVector fv{t.carrier_ptr(),
                 std::vector<ElemId>(side.ground_size(), 0)};
      for (const auto& [label, value] : *found)
        fv.values[std::size_t(side.element_index(label))] = value;
      reps.push_back(std::move(fv));
    }
    return reps;
  };

  std::vector<FVector> circuits = build_side(m, circuit_vals);
  std::vector<FVector> cocircuits = build_side(m.dual(), cocircuit_vals);
  return FMatroid(std::move(m), t, std::move(circuits), std::move(cocircuits));
}

std::map<std::string, ElemId> labeled(const Matroid& m, const FVector& v) {
  std::map<std::string, ElemId> out;
  for (std::size_t i = 0; i < v.values.size(); ++i)
    if (v.values[i] != 0) out[m.ground()[i]] = v.values[i];
  return out;
}

}  // namespace

FMatroid series_extend(const FMatroid& fm, const std::string& e) {
  const Matroid& m = fm.matroid();
  int idx = m.element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  const std::string e1 = e + "a";
  const std::string e2 = e + "b";

  std::vector<std::string> ground;
  for (const std::string& g : m.ground())
    if (g != e) ground.push_back(g);
  ground.push_back(e1);
  ground.push_back(e2);

  std::vector<std::map<std::string, ElemId>> circuits;
  for (const FVector& c : fm.circuit_reps()) {
    std::map<std::string, ElemId> vals = labeled(m, c);
    ElemId at_e = c.values[std::size_t(idx)];
    vals.erase(e);
    if (at_e != 0) {
      vals[e1] = at_e;
      vals[e2] = at_e;
    }
    circuits.push_back(std::move(vals));
  }

  const ElemId one = fm.tract().carrier().one();
  const ElemId eps = fm.tract().carrier().epsilon();
  std::vector<std::map<std::string, ElemId>> cocircuits;
  for (const FVector& d : fm.cocircuit_reps()) {
    std::map<std::string, ElemId> vals = labeled(m, d);
    ElemId at_e = d.values[std::size_t(idx)];
    vals.erase(e);
    if (at_e == 0) {
      cocircuits.push_back(std::move(vals));
    } else {
      std::map<std::string, ElemId> v1 = vals;
      v1[e2] = at_e;
      cocircuits.push_back(std::move(v1));
      std::map<std::string, ElemId> v2 = std::move(vals);
      v2[e1] = at_e;
      cocircuits.push_back(std::move(v2));
    }
  }
  cocircuits.push_back({{e1, one}, {e2, eps}});

  return assemble(fm.tract(), std::move(ground), circuits, cocircuits);
}

FMatroid parallel_extend(const FMatroid& fm, const std::string& e) {
  const Matroid& m = fm.matroid();
  int idx = m.element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  const std::string e1 = e + "a";
  const std::string e2 = e + "b";

  std::vector<std::string> ground;
  for (const std::string& g : m.ground())
    if (g != e) ground.push_back(g);
  ground.push_back(e1);
  ground.push_back(e2);

  const ElemId one = fm.tract().carrier().one();
  const ElemId eps = fm.tract().carrier().epsilon();
  std::vector<std::map<std::string, ElemId>> circuits;
  for (const FVector& c : fm.circuit_reps()) {
    std::map<std::string, ElemId> vals = labeled(m, c);
    ElemId at_e = c.values[std::size_t(idx)];
    vals.erase(e);
    if (at_e == 0) {
      circuits.push_back(std::move(vals));
    } else {
      std::map<std::string, ElemId> v1 = vals;
      v1[e2] = at_e;
      circuits.push_back(std::move(v1));
      std::map<std::string, ElemId> v2 = std::move(vals);
      v2[e1] = at_e;
      circuits.push_back(std::move(v2));
    }
  }
  circuits.push_back({{e1, one}, {e2, eps}});

  std::vector<std::map<std::string, ElemId>> cocircuits;
  for (const FVector& d : fm.cocircuit_reps()) {
    std::map<std::string, ElemId> vals = labeled(m, d);
    ElemId at_e = d.values[std::size_t(idx)];
    vals.erase(e);
    if (at_e != 0) {
      vals[e1] = at_e;
      vals[e2] = at_e;
    }
    cocircuits.push_back(std::move(vals));
  }

  return assemble(fm.tract(), std::move(ground), circuits, cocircuits);
}

Expansion expand_matroid(const FMatroid& fm, const GenVector& x,
                         const GenVector& y) {
  const Matroid& m = fm.matroid();
  if (x.coords.size() != m.ground_size() || y.coords.size() != m.ground_size())
    throw std::invalid_argument("vectors must match the ground set");

  FMatroid current = fm;
  std::map<std::string, ElemId> x_vals;
  std::map<std::string, ElemId> y_vals;

  for (std::size_t i = 0; i < m.ground_size(); ++i) {
    const std::string& e = m.ground()[i];
    std::vector<ElemId> a = x.coords[i].elements();
    std::vector<ElemId> b = y.coords[i].elements();
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(0);
    const std::size_t k = b.size();  // series copies
    const std::size_t l = a.size();  // parallel bundle size

    std::vector<std::string> chain{e};
    for (std::size_t j = 1; j < k; ++j) {
      std::string z = chain.back();
      current = series_extend(current, z);
      chain.pop_back();
      chain.push_back(z + "a");
      chain.push_back(z + "b");
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::string> bundle{chain[j]};
      for (std::size_t t = 1; t < l; ++t) {
        std::string z = bundle.back();
        current = parallel_extend(current, z);
        bundle.pop_back();
        bundle.push_back(z + "a");
        bundle.push_back(z + "b");
      }
      for (std::size_t t = 0; t < l; ++t) {
        x_vals[bundle[t]] = a[t];
        y_vals[bundle[t]] = b[j];
      }
    }
  }

  const Matroid& mm = current.matroid();
  FVector xi{fm.tract().carrier_ptr(), std::vector<ElemId>(mm.ground_size(), 0)};
  FVector yi{fm.tract().carrier_ptr(), std::vector<ElemId>(mm.ground_size(), 0)};
  for (std::size_t i = 0; i < mm.ground_size(); ++i) {
    xi.values[i] = x_vals.at(mm.ground()[i]);
    yi.values[i] = y_vals.at(mm.ground()[i]);
  }
  return Expansion{std::move(current), std::move(xi), std::move(yi)};
}

namespace {

// restriction of representatives for the side of a minor that keeps only
// the representatives vanishing at e
std::vector<std::map<std::string, ElemId>> restrict_avoiding(
    const Matroid& m, const std::vector<FVector>& reps, int idx) {
  std::vector<std::map<std::string, ElemId>> out;
  for (const FVector& v : reps) {
    if (v.values[std::size_t(idx)] != 0) continue;
    std::map<std::string, ElemId> vals = labeled(m, v);
    out.push_back(std::move(vals));
  }
  return out;
}

// restriction for the contracted side: minimal remaining supports, first
// representative per support in stored order
std::vector<std::map<std::string, ElemId>> restrict_minimal(
    const Matroid& m, const std::vector<FVector>& reps, int idx) {
  struct Entry {
    std::uint32_t mask;
    std::map<std::string, ElemId> vals;
  };
  std::vector<Entry> entries;
  for (const FVector& v : reps) {
    std::map<std::string, ElemId> vals = labeled(m, v);
    vals.erase(m.ground()[std::size_t(idx)]);
    if (vals.empty()) continue;
    std::uint32_t mask = 0;
    for (const auto& [label, value] : vals)
      mask |= 1u << m.element_index(label);
    entries.push_back({mask, std::move(vals)});
  }
  std::vector<std::map<std::string, ElemId>> out;
  std::vector<std::uint32_t> kept;
  for (const Entry& c : entries) {
    bool minimal = true;
    for (const Entry& other : entries)
      if (other.mask != c.mask && (other.mask & c.mask) == other.mask) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    if (std::find(kept.begin(), kept.end(), c.mask) != kept.end()) continue;
    kept.push_back(c.mask);
    out.push_back(c.vals);
  }
  return out;
}

}  // namespace

FMatroid fm_deleted(const FMatroid& fm, const std::string& e) {
  const Matroid& m = fm.matroid();
  int idx = m.element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  std::vector<std::string> ground;
  for (const std::string& g : m.ground())
    if (g != e) ground.push_back(g);
  auto circuits = restrict_avoiding(m, fm.circuit_reps(), idx);
  auto cocircuits = restrict_minimal(m, fm.cocircuit_reps(), idx);
  return assemble(fm.tract(), std::move(ground), circuits, cocircuits);
}

FMatroid fm_contracted(const FMatroid& fm, const std::string& e) {
  const Matroid& m = fm.matroid();
  int idx = m.element_index(e);
  if (idx < 0) throw std::invalid_argument("unknown ground element: " + e);
  std::vector<std::string> ground;
  for (const std::string& g : m.ground())
    if (g != e) ground.push_back(g);
  auto circuits = restrict_minimal(m, fm.circuit_reps(), idx);
  auto cocircuits = restrict_avoiding(m, fm.cocircuit_reps(), idx);
  return assemble(fm.tract(), std::move(ground), circuits, cocircuits);
}

std::optional<FMatroid> find_dual_pair(const Matroid& m, const Tract& t) {
  const CarrierPtr& carrier = t.carrier_ptr();
  const std::size_t units = carrier->unit_count();
  const auto& masks = m.circuit_masks();
  if (masks.empty()) {
    // free matroid: no circuits; the dual side must still be signed
    Matroid dual = m.dual();
    if (dual.circuit_masks().empty())
      return FMatroid(m, t, {}, {});
  }

  // per-representative value patterns: leading support position carries 1,
  // later positions scan units in id order
  auto patterns_for = [&](const Matroid& side) {
    std::vector<std::vector<FVector>> all;
    for (std::uint32_t mask : side.circuit_masks()) {
      std::vector<int> positions;
      for (std::size_t i = 0; i < side.ground_size(); ++i)
        if ((mask >> i) & 1) positions.push_back(int(i));
      std::vector<FVector> options;
      std::vector<std::size_t> choice(positions.size() > 0 ? positions.size() - 1
                                                           : 0,
                                      0);
      while (true) {
        FVector v{carrier, std::vector<ElemId>(side.ground_size(), 0)};
        v.values[std::size_t(positions[0])] = carrier->one();
        for (std::size_t p = 1; p < positions.size(); ++p)
          v.values[std::size_t(positions[p])] = ElemId(1 + choice[p - 1]);
        options.push_back(std::move(v));
        std::size_t q = choice.size();
        bool done = choice.empty();
        while (q > 0) {
          --q;
          if (++choice[q] < units) break;
          choice[q] = 0;
          if (q == 0) done = true;
        }
        if (done) break;
      }
      all.push_back(std::move(options));
    }
    return all;
  };

  Matroid dual = m.dual();
  auto c_patterns = patterns_for(m);
  auto d_patterns = patterns_for(dual);

  auto orthogonal_all = [&](const std::vector<FVector>& cs,
                            const std::vector<FVector>& ds) {
    for (const FVector& c : cs)
      for (const FVector& d : ds)
        if (!is_orthogonal(t, as_gen_vector(c), as_gen_vector(d))) return false;
    return true;
  };

  // odometer over the pattern lists, lexicographic with the last
  // representative fastest
  auto scan = [&](const std::vector<std::vector<FVector>>& lists,
                  const std::function<bool(const std::vector<FVector>&)>& fn) {
    std::vector<std::size_t> idx(lists.size(), 0);
    while (true) {
      std::vector<FVector> current;
      current.reserve(lists.size());
      for (std::size_t i = 0; i < lists.size(); ++i)
        current.push_back(lists[i][idx[i]]);
      if (fn(current)) return true;
      std::size_t p = idx.size();
      bool done = idx.empty();
      while (p > 0) {
        --p;
        if (++idx[p] < lists[p].size()) break;
        idx[p] = 0;
        if (p == 0) done = true;
      }
      if (done) return false;
    }
  };

  std::optional<FMatroid> found;
  scan(c_patterns, [&](const std::vector<FVector>& cs) {
    return scan(d_patterns, [&](const std::vector<FVector>& ds) {
      if (!orthogonal_all(cs, ds)) return false;
      found = FMatroid(m, t, cs, ds);
      return true;
    });
  });
  return found;
}

}  // namespace tractlab
