#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "tractlab/builtins.hpp"
#include "tractlab/closures.hpp"
#include "tractlab/phase.hpp"

using namespace tractlab;

namespace {

PhasePoint pt(long x_num, long x_den, long y_num, long y_den) {
  return PhasePoint{Rational(x_num, x_den), Rational(y_num, y_den)};
}

}  // namespace

TEST_CASE("exact points on the unit circle") {
  CHECK(pt(3, 5, 4, 5).on_unit_circle());
  CHECK(pt(-5, 13, 12, 13).on_unit_circle());
  CHECK(!pt(1, 2, 1, 2).on_unit_circle());

  PhasePoint i = pt(0, 1, 1, 1);
  CHECK(phase_mul(i, i) == pt(-1, 1, 0, 1));
  CHECK(phase_neg(i) == pt(0, 1, -1, 1));
  CHECK(phase_name(i) == "i");
  CHECK(phase_name(pt(1, 1, 0, 1)) == "1");
  CHECK(phase_name(pt(3, 5, 4, 5)) == "(3/5,4/5)");
}

TEST_CASE("positive combinations reaching zero") {
  auto combo = [](std::vector<PhasePoint> pts) {
    return contains_zero_positive_combination(pts);
  };
  CHECK(combo({pt(1, 1, 0, 1), pt(-1, 1, 0, 1)}));
  CHECK(!combo({pt(1, 1, 0, 1)}));
  CHECK(!combo({pt(1, 1, 0, 1), pt(0, 1, 1, 1)}));
  // three quarter turns span only a half plane
  CHECK(!combo({pt(1, 1, 0, 1), pt(0, 1, 1, 1), pt(-1, 1, 0, 1)}));
  CHECK(combo({pt(1, 1, 0, 1), pt(0, 1, 1, 1), pt(-1, 1, 0, 1),
               pt(0, 1, -1, 1)}));
  CHECK(combo({pt(3, 5, 4, 5), pt(-3, 5, -4, 5)}));
  // 1 and two mirrored left-half points surround the origin
  CHECK(combo({pt(1, 1, 0, 1), pt(-3, 5, 4, 5), pt(-3, 5, -4, 5)}));
  CHECK(!combo({}));
}

TEST_CASE("phase group validation") {
  PhaseGroup q = quarter_turns();
  CHECK(q.unit_count() == 4);
  CHECK(q.point(1) == pt(1, 1, 0, 1));
  CHECK(q.carrier_ptr()->name(0) == "0");

  CHECK_THROWS_AS(PhaseGroup::make({pt(1, 1, 0, 1), pt(1, 2, 1, 2)}),
                  std::invalid_argument);
  // negation of i missing
  CHECK_THROWS_AS(
      PhaseGroup::make({pt(1, 1, 0, 1), pt(-1, 1, 0, 1), pt(0, 1, 1, 1)}),
      std::invalid_argument);
  // not closed under products
  CHECK_THROWS_AS(
      PhaseGroup::make({pt(1, 1, 0, 1), pt(-1, 1, 0, 1), pt(3, 5, 4, 5),
                        pt(-3, 5, -4, 5)}),
      std::invalid_argument);
  CHECK_THROWS_AS(PhaseGroup::make({pt(0, 1, 1, 1)}), std::invalid_argument);
}

TEST_CASE("phase tract nullity") {
  Tract t = builtins::phase();
  CHECK(t.name() == "phase");
  CHECK(!t.bound());
  CHECK(t.is_null(t.empty_sum()));
  CHECK(t.is_null(t.sum({"1", "-1"})));
  CHECK(t.is_null(t.sum({"i", "-i"})));
  CHECK(!t.is_null(t.sum({"1", "1"})));
  CHECK(!t.is_null(t.sum({"1", "i"})));
  CHECK(!t.is_null(t.sum({"1", "i", "-1"})));
  CHECK(t.is_null(t.sum({"1", "i", "-1", "-i"})));
  CHECK(t.is_null(t.sum({"1", "1", "-1", "-1"})));
  // coefficients are free, so one -1 absorbs any number of 1s
  CHECK(t.is_null(t.sum({"1", "1", "1", "-1"})));
  CHECK(!t.is_null(t.sum({"1", "1", "i"})));
}

TEST_CASE("weakening makes every long sum null") {
  Tract w = builtins::weak_phase();
  Tract t = builtins::phase();
  CHECK(w.name() == "weak_phase");

  CHECK(w.is_null(w.sum({"1", "-1"})));
  CHECK(!w.is_null(w.sum({"1", "1"})));
  CHECK(!w.is_null(w.sum({"1", "i", "-1"})));

  FormalSum four_ones = w.sum({"1", "1", "1", "1"});
  CHECK(w.is_null(four_ones));
  CHECK(!t.is_null(four_ones));
  CHECK(w.is_null(w.sum({"1", "1", "1", "-1"})));

  Tract named = weaken(truncate3(t), "custom");
  CHECK(named.name() == "custom");
}
