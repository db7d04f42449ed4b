#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tractlab/axiom_checks.hpp"
#include "tractlab/builtins.hpp"
#include "tractlab/closures.hpp"
#include "tractlab/partial_field.hpp"
#include "tractlab/tract.hpp"

using namespace tractlab;

namespace {

// independent sign-nullity oracle: a nonempty sum vanishes exactly when
// both signs occur
bool sign_null_independent(const FormalSum& s) {
  int pos = 0, neg = 0;
  for (const auto& t : s.terms())
    (t.elem == 1 ? pos : neg) += int(t.mult);
  return (pos == 0 && neg == 0) || (pos > 0 && neg > 0);
}

// sign-carrier tract with a deliberately tiny null set: the empty sum and
// the orbit of 1 + (-1), answering up to norm 4
Tract stunted_sign_tract() {
  Tract sign = builtins::sign_tract();
  FormalSum pair = sign.sum({"1", "-1"});
  NullOracle oracle(
      [pair](const FormalSum& s) { return s.empty() || s == pair; }, 4,
      "stunted");
  return Tract(sign.carrier_ptr(), oracle, "stunted_sign");
}

}  // namespace

TEST_CASE("sign tract independent cross-check") {
  Tract s = builtins::sign_tract();
  for (const FormalSum& sum : enumerate_sums(s.carrier_ptr(), 6))
    CHECK(s.is_null(sum) == sign_null_independent(sum));
}

TEST_CASE("sign product matches componentwise nullity") {
  Tract ss = builtins::sign_product_tract();
  const TractCarrier& c = ss.carrier();
  // unit id u encodes ((u-1)/2, (u-1)%2) over {+,-} x {+,-}
  auto independent = [&](const FormalSum& sum) {
    int pos1 = 0, neg1 = 0, pos2 = 0, neg2 = 0;
    for (const auto& t : sum.terms()) {
      const std::string& n = c.name(t.elem);
      (n[1] == '1' ? pos1 : neg1) += int(t.mult);
      (n[n.size() - 2] == '1' && n[n.size() - 3] != '-' ? pos2 : neg2) +=
          int(t.mult);
    }
    bool first = (pos1 == 0 && neg1 == 0) || (pos1 > 0 && neg1 > 0);
    bool second = (pos2 == 0 && neg2 == 0) || (pos2 > 0 && neg2 > 0);
    return first && second;
  };
  for (const FormalSum& sum : enumerate_sums(ss.carrier_ptr(), 4))
    CHECK(ss.is_null(sum) == independent(sum));
}

TEST_CASE("sign tract axioms at bound 6") {
  Tract s = builtins::sign_tract();
  for (const AxiomReport& r : check_tract_axioms(s, 6)) CHECK(r.holds);
  CHECK(check_idyll(s, 6).holds);
  CHECK(check_fusion(s, 6).holds);
  AxiomReport sf = check_strong_fusion(s, 6);
  CHECK(sf.holds);
  CHECK(sf.violations == 0);
  CHECK(check_msf(s, 6).holds);
}

TEST_CASE("sign product fails strong fusion with the frozen minimum") {
  Tract ss = builtins::sign_product_tract();
  CHECK(check_fusion(ss, 6).holds);
  CHECK(check_idyll(ss, 6).holds);

  AxiomReport sf = check_strong_fusion(ss, 6);
  CHECK(!sf.holds);
  CHECK(sf.violations == 1272);
  REQUIRE(sf.witness);
  CHECK(sf.witness->parts[0].second == ss.sum({"(1,1)"}));
  CHECK(sf.witness->parts[1].second == ss.sum({"(1,-1)"}));
  CHECK(sf.witness->parts[2].second == ss.sum({"(1,-1)", "(-1,-1)"}));

  AxiomReport msf = check_msf(ss, 6);
  CHECK(!msf.holds);
  CHECK(msf.violations == 1032);
  REQUIRE(msf.witness);
  CHECK(msf.witness->parts[0].second == ss.sum({"(1,1)"}));
  CHECK(msf.witness->parts[1].second ==
        ss.sum({"(1,1)", "(1,1)", "(1,-1)"}));
  CHECK(msf.witness->parts[2].second == ss.sum({"(1,-1)", "(-1,-1)"}));
}

TEST_CASE("parallel scans agree with the serial ones") {
  Tract ss = builtins::sign_product_tract();
  AxiomReport serial = check_strong_fusion(ss, 5, 1);
  AxiomReport parallel = check_strong_fusion(ss, 5, 4);
  CHECK(serial.violations == parallel.violations);
  CHECK(serial.cases == parallel.cases);
  REQUIRE(serial.witness);
  REQUIRE(parallel.witness);
  CHECK(serial.witness->parts[0].second == parallel.witness->parts[0].second);
  CHECK(serial.witness->parts[1].second == parallel.witness->parts[1].second);
  CHECK(serial.witness->parts[2].second == parallel.witness->parts[2].second);
}

TEST_CASE("documented product violation verifies") {
  Tract ss = builtins::sign_product_tract();
  FormalSum alpha = ss.sum({"(1,-1)", "(1,-1)"});
  FormalSum beta = ss.sum({"(1,1)", "(1,1)"});
  FormalSum gamma = ss.sum({"(1,1)", "(-1,1)"});
  CHECK(is_fusion_violation(ss, alpha, beta, gamma, false));
  CHECK(is_fusion_violation(ss, alpha, beta, gamma, true));  // norm 4
  // scaling the triple preserves the violation
  CHECK(is_fusion_violation(ss, alpha.negated(), beta.negated(),
                            gamma.negated(), false));
  // a non-violation: premises fail
  CHECK(!is_fusion_violation(ss, alpha, beta, ss.sum({"(1,1)"}), false));
}

TEST_CASE("weak phase separates strong from modified fusion") {
  Tract p = builtins::weak_phase();
  CHECK(check_msf(p, 6).holds);
  AxiomReport sf = check_strong_fusion(p, 6);
  CHECK(!sf.holds);
  CHECK(sf.violations == 1280);
  REQUIRE(sf.witness);
  CHECK(sf.witness->parts[0].second == p.sum({"1"}));
  CHECK(sf.witness->parts[1].second == p.sum({"1"}));
  CHECK(sf.witness->parts[2].second == p.sum({"1", "1", "1"}));
  // the documented violation triple
  CHECK(is_fusion_violation(p, p.sum({"1"}), p.sum({"1", "1"}),
                            p.sum({"-1", "-1"}), false));
}

TEST_CASE("field embeddings satisfy strong fusion") {
  CHECK(check_strong_fusion(builtins::tract_by_name("gf2"), 6).holds);
  CHECK(check_strong_fusion(builtins::tract_by_name("gf3"), 6).holds);
}

TEST_CASE("multi-term rule on the sign tract") {
  Tract s = builtins::sign_tract();
  AxiomReport three = check_sum_prime(s, 3, 6);
  CHECK(three.holds);
  CHECK(three.violations == 0);
  CHECK(check_sum_prime(s, 4, 8).holds);
}

TEST_CASE("reformulated strong fusion") {
  CHECK(check_msf_prime(builtins::sign_tract(), 5).holds);
  CHECK(check_msf_prime(builtins::weak_phase(), 5).holds);
}

TEST_CASE("fusion checker reports true negatives") {
  Tract t = stunted_sign_tract();
  CHECK(check_t1(t).holds);
  CHECK(check_t2(t).holds);
  CHECK(check_t3(t, 4).holds);
  AxiomReport f = check_fusion(t, 4);
  CHECK(!f.holds);
  CHECK(f.violations == 1);
  REQUIRE(f.witness);
  CHECK(f.witness->parts[0].second == t.sum({"1", "-1"}));
  CHECK(f.witness->parts[1].second == t.sum({"1", "-1"}));
}

TEST_CASE("bounded oracles reject deeper questions") {
  Tract t = stunted_sign_tract();
  CHECK_THROWS_AS(check_idyll(t, 5), BoundError);
  CHECK_THROWS_AS(check_fusion(t, 5), BoundError);
  CHECK_THROWS_AS((void)t.is_null(t.sum({"1", "1", "1", "1", "1"})),
                  BoundError);
  try {
    check_idyll(t, 6);
  } catch (const BoundError& e) {
    CHECK(e.requested_norm() == 6);
    CHECK(e.valid_bound() == 4);
  }
}

TEST_CASE("axiom checkers flag broken null sets") {
  Tract sign = builtins::sign_tract();
  // empty sum missing
  Tract no_empty(sign.carrier_ptr(),
                 NullOracle([](const FormalSum& s) { return s.norm() == 2; },
                            3, "broken"),
                 "no_empty");
  CHECK(!check_t1(no_empty).holds);
  // no unit u with 1 + u null
  Tract no_eps(sign.carrier_ptr(),
               NullOracle([](const FormalSum& s) { return s.empty(); }, 3,
                          "broken"),
               "no_eps");
  CHECK(check_t1(no_eps).holds);
  CHECK(!check_t2(no_eps).holds);
  // null set not closed under scaling
  Tract sign2 = builtins::sign_tract();
  FormalSum ones = sign2.sum({"1", "1"});
  Tract skew(sign2.carrier_ptr(),
             NullOracle(
                 [ones, sign2](const FormalSum& s) {
                   return s.empty() || s == ones || sign2.is_null(s);
                 },
                 3, "broken"),
             "skewed");
  CHECK(!check_t3(skew, 3).holds);
}

TEST_CASE("pasture construction") {
  Tract sign = builtins::sign_tract();
  Pasture p = truncate3(sign);
  CHECK(p.contains(sign.empty_sum()));
  CHECK(p.contains(sign.sum({"1", "-1"})));
  CHECK(p.contains(sign.sum({"1", "1", "-1"})));
  CHECK(!p.contains(sign.sum({"1", "1"})));
  CHECK_THROWS_AS((void)p.contains(sign.sum({"1", "1", "-1", "-1"})),
                  BoundError);

  // orbit closure: listing 1+1+(-1) also admits its scaled copy
  Pasture q(sign.carrier_ptr(),
            {sign.sum({"1", "-1"}), sign.sum({"1", "1", "-1"})}, "q");
  CHECK(q.contains(sign.sum({"1", "-1", "-1"})));

  // a pasture must know 1 + epsilon
  CHECK_THROWS_AS(Pasture(sign.carrier_ptr(), {}, "empty"),
                  std::invalid_argument);
}

TEST_CASE("involutions validate") {
  Tract p = builtins::phase();
  // conjugation swaps i and -i
  ElemId i = *p.carrier().find("i");
  ElemId mi = *p.carrier().find("-i");
  std::vector<ElemId> conj(p.carrier().size());
  for (std::size_t e = 0; e < conj.size(); ++e) conj[e] = ElemId(e);
  conj[i] = mi;
  conj[mi] = i;
  Involution sigma(p.carrier_ptr(), conj);
  CHECK(!sigma.is_identity());
  CHECK(sigma.apply(p.sum({"i", "i"})) == p.sum({"-i", "-i"}));

  // swapping 1 and -1 is not multiplicative
  std::vector<ElemId> bad(p.carrier().size());
  for (std::size_t e = 0; e < bad.size(); ++e) bad[e] = ElemId(e);
  bad[1] = 2;
  bad[2] = 1;
  CHECK_THROWS_AS(Involution(p.carrier_ptr(), bad), std::invalid_argument);
}

TEST_CASE("morphism null preservation is a bounded check") {
  Tract gf3 = builtins::tract_by_name("gf3");
  Tract sign = builtins::sign_tract();
  ElemId two = *gf3.carrier().find("2");
  std::vector<ElemId> map(gf3.carrier().size(), 0);
  map[*gf3.carrier().find("1")] = *sign.carrier().find("1");
  map[two] = *sign.carrier().find("-1");
  Morphism m = make_morphism(gf3, sign, map, "gf3_to_sign");

  CHECK(check_morphism(m, 2).holds);
  AxiomReport r = check_morphism(m, 3);
  CHECK(!r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->parts[0].second == gf3.sum({"1", "1", "1"}));

  // collapsing both signs onto 1 in gf2 is multiplicative but loses nulls
  Tract gf2 = builtins::tract_by_name("gf2");
  std::vector<ElemId> collapse(sign.carrier().size(), 0);
  collapse[1] = *gf2.carrier().find("1");
  collapse[2] = *gf2.carrier().find("1");
  Morphism bad = make_morphism(sign, gf2, collapse, "collapse");
  AxiomReport rb = check_morphism(bad, 3);
  CHECK(!rb.holds);
  REQUIRE(rb.witness);
  CHECK(rb.witness->parts[0].second == sign.sum({"1", "1", "-1"}));

  // zero must map to zero
  std::vector<ElemId> not_hom(sign.carrier().size(), 1);
  CHECK_THROWS_AS(make_morphism(sign, gf2, not_hom, "broken"),
                  std::invalid_argument);
}
