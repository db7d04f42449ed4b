#pragma once

#include <vector>

#include "tractlab/tract.hpp"

namespace tractlab {

// Restriction of a tract to its null sums of norm at most 3.
Pasture truncate3(const Tract& t);

// Null sums of norm at most bound, in (norm, lex) order.
std::vector<FormalSum> closure_members(const Tract& t, int bound);

// Sums of norm at most bound on which the two oracles disagree, in
// (norm, lex) order.  The carriers must have the same structure.
std::vector<FormalSum> oracle_disagreements(const Tract& a, const Tract& b,
                                            int bound);

// Smallest fusion-closed null set containing the pasture's sums, computed
// on norms up to bound.  The result is a tract whose oracle answers
// exactly on norms <= bound.
Tract fusion_closure(const Pasture& p, int bound);

// Smallest superset of the null set closed under the two strong-fusion
// rules (null + null at norm >= 4, and fused pairs through a non-member
// gamma), computed on norms up to bound.  The base oracle must answer up
// to this bound.
Tract sigma_closure(const Tract& t, int bound);

}  // namespace tractlab
