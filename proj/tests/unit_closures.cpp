#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tractlab/axiom_checks.hpp"
#include "tractlab/builtins.hpp"
#include "tractlab/closures.hpp"

using namespace tractlab;

namespace {

Tract stunted_sign_tract() {
  Tract sign = builtins::sign_tract();
  FormalSum pair = sign.sum({"1", "-1"});
  NullOracle oracle(
      [pair](const FormalSum& s) { return s.empty() || s == pair; }, 4,
      "stunted");
  return Tract(sign.carrier_ptr(), oracle, "stunted_sign");
}

}  // namespace

TEST_CASE("truncation keeps the low-norm null set") {
  Tract sign = builtins::sign_tract();
  Pasture p = truncate3(sign);
  CHECK(p.null_sums().size() == 4);  // 0, 1+(-1), 1+1+(-1), 1+(-1)+(-1)

  Tract shallow(sign.carrier_ptr(),
                NullOracle([](const FormalSum& s) { return s.empty(); }, 2,
                           "shallow"),
                "shallow");
  CHECK_THROWS_AS(truncate3(shallow), BoundError);
}

TEST_CASE("closure members are ordered") {
  Tract sign = builtins::sign_tract();
  auto members = closure_members(sign, 4);
  CHECK(members.size() == 7);
  CHECK(members[0].empty());
  CHECK(members[1] == sign.sum({"1", "-1"}));
  CHECK(members[2] == sign.sum({"1", "1", "-1"}));
  CHECK(members[3] == sign.sum({"1", "-1", "-1"}));
  CHECK(members[4] == sign.sum({"1", "1", "1", "-1"}));
}

TEST_CASE("fusion closure of the sign pasture recovers the sign tract") {
  Tract sign = builtins::sign_tract();
  Tract closed = fusion_closure(truncate3(sign), 6);
  CHECK(closure_members(closed, 6).size() == 16);
  CHECK(oracle_disagreements(closed, sign, 6).empty());
  // membership is orbit-expanded
  CHECK(closed.is_null(sign.sum({"1", "1", "-1"}).negated()));
  CHECK(!closed.is_null(sign.sum({"1", "1"})));
  // the closure answers only up to its bound
  CHECK_THROWS_AS(
      (void)closed.is_null(sign.sum({"1", "1", "1", "1", "-1", "-1", "-1"})),
      BoundError);
}

TEST_CASE("fusion closure of the product pasture recovers the product tract") {
  Tract ss = builtins::sign_product_tract();
  CHECK(closure_members(ss, 6).size() == 126);
  Tract closed = fusion_closure(truncate3(ss), 6);
  CHECK(oracle_disagreements(closed, ss, 6).empty());
}

TEST_CASE("a gutted pasture does not close up to the full null set") {
  Tract sign = builtins::sign_tract();
  Tract closed = fusion_closure(truncate3(stunted_sign_tract()), 4);
  CHECK(closure_members(closed, 4).size() == 3);
  auto diff = oracle_disagreements(closed, sign, 4);
  REQUIRE(!diff.empty());
  CHECK(diff[0] == sign.sum({"1", "1", "-1"}));
}

TEST_CASE("saturation fixes the sign tract") {
  Tract sign = builtins::sign_tract();
  CHECK(oracle_disagreements(sigma_closure(sign, 6), sign, 6).empty());
}

TEST_CASE("saturation strictly grows the product tract") {
  Tract ss = builtins::sign_product_tract();
  Tract saturated = sigma_closure(ss, 6);
  FormalSum gained =
      ss.sum({"(1,-1)", "(1,-1)", "(1,1)", "(1,1)"});
  CHECK(!ss.is_null(gained));
  CHECK(saturated.is_null(gained));
  CHECK(closure_members(saturated, 6).size() == 186);
  CHECK(check_msf(saturated, 6).holds);
}

TEST_CASE("saturating the gutted null set stops at its small fixed point") {
  Tract saturated = sigma_closure(stunted_sign_tract(), 4);
  CHECK(closure_members(saturated, 4).size() == 3);
}

TEST_CASE("disagreements come in norm-lex order") {
  Tract sign = builtins::sign_tract();
  auto diff = oracle_disagreements(stunted_sign_tract(), sign, 4);
  CHECK(diff.size() == 5);
  CHECK(diff[0] == sign.sum({"1", "1", "-1"}));
  CHECK(diff[1] == sign.sum({"1", "-1", "-1"}));
}
