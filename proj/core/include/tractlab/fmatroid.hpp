#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tractlab/matroid.hpp"
#include "tractlab/report.hpp"
#include "tractlab/tract.hpp"

namespace tractlab {

// Coordinate vector with entries in the carrier (norm <= 1 per
// coordinate; 0 allowed), aligned with a ground set by position.
struct FVector {
  CarrierPtr carrier;
  std::vector<ElemId> values;

  std::uint32_t support_mask() const;
  FVector scaled(ElemId unit) const;
  std::string str() const;
  friend bool operator==(const FVector&, const FVector&);
};

// Coordinate vector with formal-sum entries.
struct GenVector {
  CarrierPtr carrier;
  std::vector<FormalSum> coords;

  std::uint32_t support_mask() const;
  std::string str() const;
  friend bool operator==(const GenVector&, const GenVector&);
};

GenVector as_gen_vector(const FVector& v);

// One FVector representative per unit orbit, declared to support the
// circuits of a matroid.  The C0-C2 invariants are checked by
// check_f_signature rather than on construction.
struct FSignature {
  Matroid matroid;
  std::vector<FVector> reps;
};

// Sum over coordinates of X(e) * tau(Y(e)), with tau the tract's
// involution applied to the second argument.
FormalSum inner_product(const Tract& t, const GenVector& x, const GenVector& y);
bool is_orthogonal(const Tract& t, const GenVector& x, const GenVector& y);

// C0: no representative is the zero vector.
// C1: representatives are pairwise non-proportional.
// C2: supports biject with the circuits of the declared matroid.
std::vector<AxiomReport> check_f_signature(const FSignature& sig);

// Matroid with a circuit signature, a cocircuit signature on the dual,
// and the ambient tract.  Construction checks shapes only; the dual-pair
// axioms are reported by check_dual_pair.
class FMatroid {
public:
  FMatroid(Matroid matroid, Tract tract, std::vector<FVector> circuit_reps,
           std::vector<FVector> cocircuit_reps);

  const Matroid& matroid() const { return matroid_; }
  const Matroid& dual_matroid() const { return dual_; }
  const Tract& tract() const { return tract_; }
  const std::vector<FVector>& circuit_reps() const { return circuit_reps_; }
  const std::vector<FVector>& cocircuit_reps() const { return cocircuit_reps_; }

  FSignature circuit_signature() const { return {matroid_, circuit_reps_}; }
  FSignature cocircuit_signature() const { return {dual_, cocircuit_reps_}; }

  FMatroid dual() const;

private:
  Matroid matroid_;
  Matroid dual_;
  Tract tract_;
  std::vector<FVector> circuit_reps_;
  std::vector<FVector> cocircuit_reps_;
};

// DP1: circuit signature satisfies C0-C2 on the matroid.
// DP2: cocircuit signature satisfies C0-C2 on the dual matroid.
// DP3: every circuit representative is orthogonal to every cocircuit
//      representative.
std::vector<AxiomReport> check_dual_pair(const FMatroid& fm);

// All X in N[F_x]^E with per-coordinate norm <= coord_bound orthogonal to
// every cocircuit (vectors) or circuit (covectors) representative.
// Deterministic stream: coordinates in ground order, per-coordinate sums
// in (norm, lex) order, last coordinate fastest.
std::vector<GenVector> gen_vectors(const FMatroid& fm, int coord_bound);
std::vector<GenVector> gen_covectors(const FMatroid& fm, int coord_bound);

// The coord_bound 1 sets, restricted to carrier-valued coordinates.
std::vector<FVector> vectors(const FMatroid& fm);
std::vector<FVector> covectors(const FMatroid& fm);

// Coordinate e becomes empty; elsewhere Y(e)X(f) - X(e)Y(f).
GenVector wedge(const Tract& t, const GenVector& x, const GenVector& y,
                std::size_t e);

// Replace ground element e by the series pair e"a", e"b" (appended to the
// end of the ground set).  Circuits through e duplicate their value onto
// both new elements; cocircuits split into the two restrictions plus the
// two-element family, stored with leading value 1.
FMatroid series_extend(const FMatroid& fm, const std::string& e);
// Dual construction: cocircuits copy, circuits split.
FMatroid parallel_extend(const FMatroid& fm, const std::string& e);

struct Expansion {
  FMatroid fmatroid;
  FVector x_image;
  FVector y_image;
};

// Replace each e by k(e) = max(1, norm(Y(e))) series copies of a bundle of
// l(e) = max(1, norm(X(e))) parallel elements, distributing the terms of
// X(e) across a bundle and the terms of Y(e) across the series copies, so
// that inner products are preserved exactly.
Expansion expand_matroid(const FMatroid& fm, const GenVector& x,
                         const GenVector& y);

// Minors with transformed signatures: deletion keeps circuits avoiding e
// and contracts the cocircuit side; contraction is dual.
FMatroid fm_deleted(const FMatroid& fm, const std::string& e);
FMatroid fm_contracted(const FMatroid& fm, const std::string& e);

// Lexicographically least pair of signatures satisfying C0-C2 and DP3,
// scanning unit patterns with leading support value 1 on each
// representative; nullopt when no signing exists.
std::optional<FMatroid> find_dual_pair(const Matroid& m, const Tract& t);

}  // namespace tractlab
