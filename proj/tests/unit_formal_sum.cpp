#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "tractlab/formal_sum.hpp"

using namespace tractlab;

namespace {

// {0, 1, -1} with the evident multiplication
CarrierPtr sign_carrier() {
  return make_carrier({"0", "1", "-1"},
                      {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, 1, 2);
}

// {0, 1, -1, i, -i}: the four quarter turns
CarrierPtr quarter_carrier() {
  return make_carrier({"0", "1", "-1", "i", "-i"},
                      {{0, 0, 0, 0, 0},
                       {0, 1, 2, 3, 4},
                       {0, 2, 1, 4, 3},
                       {0, 3, 4, 2, 1},
                       {0, 4, 3, 1, 2}},
                      1, 2);
}

}  // namespace

TEST_CASE("carrier validation") {
  CHECK_NOTHROW(sign_carrier());
  CHECK_NOTHROW(quarter_carrier());

  // zero must be absorbing
  CHECK_THROWS_AS(make_carrier({"0", "1", "-1"},
                               {{0, 0, 0}, {0, 1, 2}, {1, 2, 1}}, 1, 2),
                  std::invalid_argument);
  // epsilon must square to one
  CHECK_THROWS_AS(make_carrier({"0", "1", "-1", "i", "-i"},
                               {{0, 0, 0, 0, 0},
                                {0, 1, 2, 3, 4},
                                {0, 2, 1, 4, 3},
                                {0, 3, 4, 2, 1},
                                {0, 4, 3, 1, 2}},
                               1, 3),
                  std::invalid_argument);
  // units must form a group (here: 2 has no inverse)
  CHECK_THROWS_AS(make_carrier({"0", "1", "x"},
                               {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 1, 1),
                  std::invalid_argument);
  // names must be distinct
  CHECK_THROWS_AS(make_carrier({"0", "1", "1"},
                               {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("carrier accessors") {
  CarrierPtr c = sign_carrier();
  CHECK(c->size() == 3);
  CHECK(c->unit_count() == 2);
  CHECK(c->zero() == 0);
  CHECK(c->one() == 1);
  CHECK(c->epsilon() == 2);
  CHECK(c->mul(2, 2) == 1);
  CHECK(c->inverse(2) == 2);
  CHECK(c->find("-1") == ElemId(2));
  CHECK(!c->find("q"));
  CHECK(c->same_structure(*sign_carrier()));
  CHECK(!c->same_structure(*quarter_carrier()));
}

TEST_CASE("formal sums merge and multiply") {
  CarrierPtr c = sign_carrier();
  FormalSum empty(c);
  CHECK(empty.empty());
  CHECK(empty.norm() == 0);
  CHECK(empty.str() == "0");

  FormalSum a(c, {1, 1, 2});
  CHECK(a.norm() == 3);
  CHECK(a.terms().size() == 2);
  CHECK(a.terms()[0].elem == 1);
  CHECK(a.terms()[0].mult == 2);
  CHECK(a.str() == "1+1+(-1)");

  FormalSum b(c, {2});
  CHECK((a + b).str() == "1+1+(-1)+(-1)");
  CHECK((a + empty) == a);

  // products distribute over all term pairs
  CHECK((a * b).str() == "1+(-1)+(-1)");
  CHECK((empty * a).empty());

  CHECK(a.scaled(2).str() == "1+(-1)+(-1)");
  CHECK(a.negated() == a.scaled(2));

  // zero is not a term
  CHECK_THROWS_AS(FormalSum(c, {0}), std::invalid_argument);
}

TEST_CASE("norm-lexicographic order") {
  CarrierPtr c = sign_carrier();
  FormalSum one(c, {1});
  FormalSum minus(c, {2});
  FormalSum pair(c, {1, 2});
  CHECK(one < minus);    // same norm, lex on element ids
  CHECK(minus < pair);   // smaller norm first
  CHECK(FormalSum(c) < one);
  CHECK(one <= one);
  CHECK(pair == FormalSum(c, {2, 1}));  // input order is irrelevant
}

TEST_CASE("enumerate_sums is ordered and complete") {
  CarrierPtr c = sign_carrier();
  auto all = enumerate_sums(c, 3);
  // multisets from 2 units with norm <= 3: 1 + 2 + 3 + 4
  CHECK(all.size() == 10);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front().empty());
  CHECK(all.back().str() == "(-1)+(-1)+(-1)");

  auto only_two = enumerate_sums(c, 2, 2);
  CHECK(only_two.size() == 3);
  CHECK(only_two[0].str() == "1+1");
  CHECK(only_two[1].str() == "1+(-1)");
  CHECK(only_two[2].str() == "(-1)+(-1)");

  auto quarters = enumerate_sums(quarter_carrier(), 2);
  // 1 empty + 4 singles + C(5,2)=10 pairs
  CHECK(quarters.size() == 15);
}

TEST_CASE("orbit minimum") {
  CarrierPtr c = quarter_carrier();
  FormalSum s(c, {3, 4});  // i + (-i)
  // orbit contains 1+(-1) (scale by -i or i), which is lex-least
  CHECK(orbit_min(s).str() == "1+(-1)");
  FormalSum t(c, {2});
  CHECK(orbit_min(t).str() == "1");
  CHECK(orbit_min(FormalSum(c)).empty());
}

TEST_CASE("hash respects equality") {
  CarrierPtr c = sign_carrier();
  FormalSumHash h;
  CHECK(h(FormalSum(c, {1, 2})) == h(FormalSum(c, {2, 1})));
}
