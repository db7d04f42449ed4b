#pragma once

#include <vector>

#include "tractlab/report.hpp"
#include "tractlab/tract.hpp"

namespace tractlab {

// Basic null-set axioms.
//   T1: the empty sum is null and no single unit is null.
//   T2: 1 + u is null for exactly one unit u, the designated epsilon.
//   T3: the null set is closed under scaling by units (checked up to the
//       norm bound).
AxiomReport check_t1(const Tract& t);
AxiomReport check_t2(const Tract& t);
AxiomReport check_t3(const Tract& t, int bound);
std::vector<AxiomReport> check_tract_axioms(const Tract& t, int bound);

// Idyll: the null set is closed under addition (sums of null sums with
// total norm within the bound stay null).
AxiomReport check_idyll(const Tract& t, int bound);

// Fusion: alpha + z and beta - z null for some element z (possibly 0)
// forces alpha + beta null.  Scanned over norm(alpha) + norm(beta) <=
// bound, with z != 0 requiring the premises to stay within the bound.
AxiomReport check_fusion(const Tract& t, int bound);

// Strong fusion: alpha + gamma and beta - gamma null with gamma either 0
// or non-null forces alpha + beta null.  gamma ranges over formal sums
// with norm(gamma) <= bound - 2 and both premises within the bound.
AxiomReport check_strong_fusion(const Tract& t, int bound, int jobs = 1);

// Same premises as strong fusion but the conclusion is only required when
// norm(alpha + beta) >= 4.
AxiomReport check_msf(const Tract& t, int bound, int jobs = 1);

// Re-verifies one candidate triple.  msf_only additionally requires
// norm(alpha + beta) >= 4 for the triple to count as a violation.
bool is_fusion_violation(const Tract& t, const FormalSum& alpha,
                         const FormalSum& beta, const FormalSum& gamma,
                         bool msf_only);

// Reformulated strong fusion: gamma non-null, alpha + beta*gamma null, and
// delta - gamma null force alpha + beta*delta null whenever its norm is at
// least 4.  All four range over formal sums within the window bound.
AxiomReport check_msf_prime(const Tract& t, int bound);

// n-fold consequence of strong fusion: if every (n-1)- and (n-2)-subset
// sum of X_1, ..., X_n is null, the total sum is null.  Tuples are scanned
// with total norm <= bound.
AxiomReport check_sum_prime(const Tract& t, int n, int bound);

// Null preservation of a multiplicative map: images of null sums of norm
// <= bound must be null in the target.
AxiomReport check_morphism(const Morphism& m, int bound);

}  // namespace tractlab
