#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tractlab/fmatroid.hpp"
#include "tractlab/report.hpp"

namespace tractlab {

// X wedge_e Y stays orthogonal to every circuit representative, for all
// generalized covectors X, Y within the coordinate bound and every
// ground element e.
AxiomReport check_wedge_closure(const FMatroid& fm, int coord_bound);

// Restrictions of generalized vectors and covectors land in the expected
// minors: covectors vanishing at e restrict into the covector set of the
// contraction, vectors vanishing at e into the vector set of the deletion,
// every covector into the covector set of the deletion, and every vector
// into the vector set of the contraction.
AxiomReport check_minor_props(const FMatroid& fm, int coord_bound);

// Whenever a coordinate of a generalized vector is a non-null sum, some
// circuit through that coordinate fits inside the vector's support.
AxiomReport check_supp_lemma(const FMatroid& fm, int coord_bound);

// Vector/covector pairs whose pairing has norm at most three must pair
// to a null sum; this needs no fusion hypothesis on the tract.
AxiomReport check_lower_term(const FMatroid& fm, int coord_bound);

struct PairViolation {
  GenVector x;
  GenVector y;
  FormalSum inner;
};

// Outcome of a bounded exhaustive orthogonality scan between the vector
// and covector streams of a matroid over a tract.
struct Certificate {
  std::string claim;
  std::string subject;
  int coord_bound = 1;
  std::optional<int> oracle_bound;
  std::uint64_t vectors = 0;
  std::uint64_t covectors = 0;
  std::uint64_t pairs_checked = 0;
  bool certified = false;
  std::optional<PairViolation> violation;
};

// Every vector pairs nullly with every covector (coordinate bound one).
Certificate certify_perfection(const FMatroid& fm, std::string subject = {});

// Every generalized vector within the coordinate bound pairs nullly with
// every generalized covector within the bound.  Stops at the first
// violating pair; pairs_checked counts the pairs actually examined, with
// the vector stream outer and the covector stream inner.
Certificate certify_strong_perfection(const FMatroid& fm, int coord_bound,
                                      std::string subject = {});

}  // namespace tractlab
