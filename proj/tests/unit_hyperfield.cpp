#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tractlab/builtins.hpp"
#include "tractlab/hyperfield.hpp"

using namespace tractlab;

namespace {

// sign table with 1 + (-1) broken down to {0}: reversibility and
// associativity both fail
Hyperfield broken_sign() {
  std::vector<std::vector<std::vector<ElemId>>> table(
      3, std::vector<std::vector<ElemId>>(3));
  table[0][0] = {0};
  table[0][1] = table[1][0] = {1};
  table[0][2] = table[2][0] = {2};
  table[1][1] = {1};
  table[2][2] = {2};
  table[1][2] = table[2][1] = {0};
  return Hyperfield({"0", "1", "-1"}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}},
                    {0, 2, 1}, table, 1, "broken_sign");
}

}  // namespace

TEST_CASE("sign hyperfield structure") {
  Hyperfield s = builtins::sign();
  CHECK(s.size() == 3);
  CHECK(s.name() == "sign");
  CHECK(s.neg(s.one()) == s.carrier().epsilon());
  CHECK(s.hypersum(1, 1) == HypersumSet{{1}});
  CHECK(s.hypersum(1, 2) == HypersumSet{{0, 1, 2}});
  CHECK(s.hypersum(0, 2) == HypersumSet{{2}});

  ElemId ones[] = {1, 1, 2};
  CHECK(hypersum_many(s, ones) == HypersumSet{{0, 1, 2}});
  ElemId allpos[] = {1, 1, 1};
  CHECK(hypersum_many(s, allpos) == HypersumSet{{1}});
  CHECK(hypersum_many(s, {}) == HypersumSet{{0}});
}

TEST_CASE("hyperfield axioms hold for the built-ins") {
  for (const char* name : {"sign", "sign_product", "gf2", "gf3"}) {
    auto reports = check_hyperfield_axioms(builtins::hyperfield_by_name(name));
    CHECK(reports.size() == 8);
    for (const AxiomReport& r : reports) {
      INFO(name, " ", r.axiom);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("axiom checker diagnoses a broken table") {
  auto reports = check_hyperfield_axioms(broken_sign());
  CHECK(!all_hold(reports));
  for (const AxiomReport& r : reports)
    if (r.axiom == "HG6") CHECK(!r.holds);  // reversibility breaks first
}

TEST_CASE("stringency") {
  CHECK(check_stringency(builtins::sign()).holds);
  CHECK(check_stringency(builtins::hyperfield_by_name("gf3")).holds);

  AxiomReport r = check_stringency(builtins::sign_product());
  CHECK(!r.holds);
  REQUIRE(r.witness);
  // the witness pair (1,1), (1,-1) hypersums to a two-element set
  CHECK(r.witness->note.find("(1,1)") != std::string::npos);
  CHECK(r.witness->note.find("(1,-1)") != std::string::npos);
}

TEST_CASE("product hyperfield carrier") {
  Hyperfield ss = builtins::sign_product();
  CHECK(ss.size() == 5);  // 0 plus units x units
  const TractCarrier& c = ss.carrier();
  CHECK(c.name(1) == "(1,1)");
  CHECK(c.name(2) == "(1,-1)");
  CHECK(c.name(3) == "(-1,1)");
  CHECK(c.name(4) == "(-1,-1)");
  CHECK(c.epsilon() == 4);

  // exact negatives produce everything
  CHECK(ss.hypersum(1, 4) == HypersumSet{{0, 1, 2, 3, 4}});
  // non-negatives stay componentwise and zero-free
  CHECK(ss.hypersum(1, 2) == HypersumSet{{1, 2}});
  CHECK(ss.hypersum(1, 1) == HypersumSet{{1}});
}

TEST_CASE("tract of a hyperfield") {
  Hyperfield s = builtins::sign();
  Tract t = tract_of(s);
  CHECK(t.name() == "sign");
  CHECK(!t.bound());
  CHECK(t.is_null(t.sum({"1", "-1"})));
  CHECK(t.is_null(t.empty_sum()));
  CHECK(!t.is_null(t.sum({"1", "1"})));

  Tract bounded = tract_of(s, 4);
  CHECK(bounded.bound() == 4);
  CHECK_THROWS_AS((void)bounded.is_null(t.sum({"1", "1", "1", "1", "1"})),
                  BoundError);

  Pasture p = pasture_of(s);
  CHECK(p.null_sums().size() == 4);
}

TEST_CASE("closure of the truncation against the full null set") {
  CHECK(check_hap(builtins::sign(), 6).holds);
  CHECK(check_hap(builtins::sign_product(), 5).holds);
  CHECK(check_hap(builtins::sign_product(), 6).holds);
}

TEST_CASE("stringency equivalence reports") {
  auto sign_reports = check_stringency_equivalence(builtins::sign(), 5, 5);
  CHECK(sign_reports.size() == 2);
  CHECK(sign_reports[0].holds);  // verdicts agree
  CHECK(sign_reports[1].holds);  // zero-free folds are singletons

  auto ss_reports =
      check_stringency_equivalence(builtins::sign_product(), 5, 4);
  CHECK(ss_reports[0].holds);    // both verdicts are negative
  CHECK(!ss_reports[1].holds);   // a zero-free fold with two outcomes exists
}

TEST_CASE("field hyperfields are singleton-valued") {
  Hyperfield g3 = builtins::hyperfield_by_name("gf3");
  CHECK(g3.size() == 3);
  CHECK(g3.hypersum(1, 2).elems.size() == 1);
  Tract t = tract_of(g3);
  CHECK(t.is_null(t.sum({"1", "1", "1"})));
  CHECK(t.is_null(t.sum({"1", "2"})));
  CHECK(!t.is_null(t.sum({"1", "1"})));
  CHECK_THROWS_AS(make_field_hyperfield(4), std::invalid_argument);
}
