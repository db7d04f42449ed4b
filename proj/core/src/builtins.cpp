#include "tractlab/builtins.hpp"

#include <cctype>
#include <stdexcept>

#include "tractlab/matroid.hpp"
#include "tractlab/partial_field.hpp"
#include "tractlab/phase.hpp"

namespace tractlab::builtins {

namespace {

std::string_view strip_prefix(std::string_view ref) {
  constexpr std::string_view prefix = "builtin:";
  if (ref.starts_with(prefix)) ref.remove_prefix(prefix.size());
  return ref;
}

}  // namespace

Hyperfield sign() { return make_sign_hyperfield(); }

Hyperfield sign_product() {
  Hyperfield s = make_sign_hyperfield();
  return make_product_hyperfield(s, s, "sign_product");
}

Tract sign_tract() { return tract_of(sign()); }

Tract sign_product_tract() { return tract_of(sign_product()); }

Tract phase() { return phase_tract(quarter_turns(), "phase"); }

Tract weak_phase() { return weak_phase_tract(quarter_turns(), "weak_phase"); }

Tract tract_by_name(std::string_view ref) {
  std::string_view name = strip_prefix(ref);
  if (name == "sign") return sign_tract();
  if (name == "sign_product") return sign_product_tract();
  if (name == "gf2") return gf_tract(2);
  if (name == "gf3") return gf_tract(3);
  if (name == "gf5") return gf_tract(5);
  if (name == "gf7") return gf_tract(7);
  if (name == "phase") return phase();
  if (name == "weak_phase") return weak_phase();
  throw std::invalid_argument("unknown builtin tract: " + std::string(ref));
}

Hyperfield hyperfield_by_name(std::string_view ref) {
  std::string_view name = strip_prefix(ref);
  if (name == "sign") return sign();
  if (name == "sign_product") return sign_product();
  if (name == "gf2") return make_field_hyperfield(2);
  if (name == "gf3") return make_field_hyperfield(3);
  if (name == "gf5") return make_field_hyperfield(5);
  if (name == "gf7") return make_field_hyperfield(7);
  throw std::invalid_argument("unknown builtin hyperfield: " + std::string(ref));
}

FMatroid fixture(std::string_view key) {
  // key shape: u<rank><size>_<tract>
  if (key.size() < 5 || key[0] != 'u' || !std::isdigit(key[1]) ||
      !std::isdigit(key[2]) || key[3] != '_')
    throw std::invalid_argument("bad fixture key: " + std::string(key));
  int rank = key[1] - '0';
  int size = key[2] - '0';
  Tract t = tract_by_name(key.substr(4));
  Matroid m = Matroid::uniform(rank, size);
  auto found = find_dual_pair(m, t);
  if (!found)
    throw std::invalid_argument("no dual pair for fixture: " + std::string(key));
  return *found;
}

std::vector<std::string> fixture_names() {
  return {"u12_sign", "u12_gf2", "u12_gf3", "u23_sign",
          "u23_gf2",  "u23_gf3", "u24_sign", "u24_gf3"};
}

}  // namespace tractlab::builtins
