#include "tractlab/perfection.hpp"

#include <utility>

namespace tractlab {

AxiomReport check_wedge_closure(const FMatroid& fm, int coord_bound) {
  AxiomReport r{.axiom = "WEDGE", .bound_checked = coord_bound};
  const Tract& t = fm.tract();
  std::vector<GenVector> covs = gen_covectors(fm, coord_bound);
  std::vector<GenVector> circuit_gens;
  for (const FVector& c : fm.circuit_reps())
    circuit_gens.push_back(as_gen_vector(c));

  const std::size_t n = fm.matroid().ground_size();
  for (const GenVector& x : covs)
    for (const GenVector& y : covs)
      for (std::size_t e = 0; e < n; ++e) {
        ++r.cases;
        GenVector w = wedge(t, x, y, e);
        for (const GenVector& c : circuit_gens) {
          FormalSum s = inner_product(t, w, c);
          if (!t.is_null(s)) {
            ++r.violations;
            if (r.holds) {
              r.holds = false;
              r.witness = Witness{{{"inner", s}},
                                  "X=" + x.str() + ", Y=" + y.str() + ", e=" +
                                      fm.matroid().ground()[e] + ", wedge=" +
                                      w.str() + ", C=" + c.str()};
            }
            break;
          }
        }
      }
  return r;
}

namespace {

GenVector drop_coord(const GenVector& v, std::size_t e) {
  GenVector out{v.carrier, {}};
  out.coords.reserve(v.coords.size() - 1);
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    if (i != e) out.coords.push_back(v.coords[i]);
  return out;
}

bool member(const Tract& t, const GenVector& v, const std::vector<FVector>& reps) {
  for (const FVector& rep : reps)
    if (!is_orthogonal(t, v, as_gen_vector(rep))) return false;
  return true;
}

}  // namespace

AxiomReport check_minor_props(const FMatroid& fm, int coord_bound) {
  AxiomReport r{.axiom = "MINORS", .bound_checked = coord_bound};
  const Tract& t = fm.tract();
  std::vector<GenVector> vecs = gen_vectors(fm, coord_bound);
  std::vector<GenVector> covs = gen_covectors(fm, coord_bound);

  auto record = [&](const GenVector& v, const std::string& e,
                    const std::string& what) {
    ++r.violations;
    if (r.holds) {
      r.holds = false;
      r.witness = Witness{{}, what + " fails for " + v.str() + " at e=" + e};
    }
  };

  for (std::size_t e = 0; e < fm.matroid().ground_size(); ++e) {
    const std::string& label = fm.matroid().ground()[e];
    FMatroid del = fm_deleted(fm, label);
    FMatroid con = fm_contracted(fm, label);

    for (const GenVector& x : covs) {
      GenVector rest = drop_coord(x, e);
      if (x.coords[e].empty()) {
        ++r.cases;
        if (!member(t, rest, con.circuit_reps()))
          record(x, label, "covector into contraction");
      }
      ++r.cases;
      if (!member(t, rest, del.circuit_reps()))
        record(x, label, "covector into deletion");
    }
    for (const GenVector& x : vecs) {
      GenVector rest = drop_coord(x, e);
      if (x.coords[e].empty()) {
        ++r.cases;
        if (!member(t, rest, del.cocircuit_reps()))
          record(x, label, "vector into deletion");
      }
      ++r.cases;
      if (!member(t, rest, con.cocircuit_reps()))
        record(x, label, "vector into contraction");
    }
  }
  return r;
}

AxiomReport check_supp_lemma(const FMatroid& fm, int coord_bound) {
  AxiomReport r{.axiom = "SUPP", .bound_checked = coord_bound};
  const Tract& t = fm.tract();
  const auto& masks = fm.matroid().circuit_masks();
  for (const GenVector& x : gen_vectors(fm, coord_bound)) {
    std::uint32_t supp = x.support_mask();
    for (std::size_t e = 0; e < x.coords.size(); ++e) {
      const FormalSum& v = x.coords[e];
      if (v.empty() || t.is_null(v)) continue;
      ++r.cases;
      bool found = false;
      for (std::uint32_t m : masks)
        if (((m >> e) & 1) && (m & supp) == m) {
          found = true;
          break;
        }
      if (!found) {
        ++r.violations;
        if (r.holds) {
          r.holds = false;
          r.witness = Witness{{{"X(e)", v}},
                              "X=" + x.str() + ", e=" +
                                  fm.matroid().ground()[e] +
                                  ": no circuit through e inside supp(X)"};
        }
      }
    }
  }
  return r;
}

AxiomReport check_lower_term(const FMatroid& fm, int coord_bound) {
  AxiomReport r{.axiom = "LOWTERM", .bound_checked = coord_bound};
  const Tract& t = fm.tract();
  std::vector<GenVector> vecs = gen_vectors(fm, coord_bound);
  std::vector<GenVector> covs = gen_covectors(fm, coord_bound);
  for (const GenVector& x : vecs)
    for (const GenVector& y : covs) {
      FormalSum s = inner_product(t, x, y);
      if (s.norm() > 3) continue;
      ++r.cases;
      if (!t.is_null(s)) {
        ++r.violations;
        if (r.holds) {
          r.holds = false;
          r.witness = Witness{{{"inner", s}}, "X=" + x.str() + ", Y=" + y.str()};
        }
      }
    }
  return r;
}

namespace {

Certificate certify(const FMatroid& fm, int coord_bound, std::string subject,
                    std::string claim) {
  Certificate cert;
  cert.claim = std::move(claim);
  cert.subject = subject.empty() ? fm.tract().name() + " matroid"
                                 : std::move(subject);
  cert.coord_bound = coord_bound;
  cert.oracle_bound = fm.tract().bound();

  const Tract& t = fm.tract();
  std::vector<GenVector> vecs = gen_vectors(fm, coord_bound);
  std::vector<GenVector> covs = gen_covectors(fm, coord_bound);
  cert.vectors = vecs.size();
  cert.covectors = covs.size();
  cert.certified = true;
  for (const GenVector& x : vecs) {
    for (const GenVector& y : covs) {
      ++cert.pairs_checked;
      FormalSum s = inner_product(t, x, y);
      if (!t.is_null(s)) {
        cert.certified = false;
        cert.violation = PairViolation{x, y, s};
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace

Certificate certify_perfection(const FMatroid& fm, std::string subject) {
  return certify(fm, 1, std::move(subject), "perfection");
}

Certificate certify_strong_perfection(const FMatroid& fm, int coord_bound,
                                      std::string subject) {
  return certify(fm, coord_bound, std::move(subject), "strong-perfection");
}

}  // namespace tractlab
