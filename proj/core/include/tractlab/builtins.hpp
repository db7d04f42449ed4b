#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tractlab/fmatroid.hpp"
#include "tractlab/hyperfield.hpp"
#include "tractlab/tract.hpp"

namespace tractlab::builtins {

Hyperfield sign();          // hyperfield of signs
Hyperfield sign_product();  // restricted product of two copies of sign

Tract sign_tract();
Tract sign_product_tract();
Tract phase();       // quarter-turn phases with exact nullity
Tract weak_phase();  // norm-3 truncation of phase, null above norm 3

// Accepts "builtin:<name>" or a bare name: sign, sign_product, gf2, gf3,
// gf5, gf7, phase, weak_phase.
Tract tract_by_name(std::string_view ref);

// Accepts "builtin:<name>" or a bare name: sign, sign_product, gf2, gf3,
// gf5, gf7.
Hyperfield hyperfield_by_name(std::string_view ref);

// Canonical dual pairs on uniform matroids, built by the lexicographic
// search.  Keys look like "u23_sign": U_{2,3} over the sign tract.
FMatroid fixture(std::string_view key);
std::vector<std::string> fixture_names();

}  // namespace tractlab::builtins
