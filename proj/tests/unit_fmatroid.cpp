#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tractlab/builtins.hpp"
#include "tractlab/fmatroid.hpp"

using namespace tractlab;

namespace {

FVector fv(const Tract& t, const std::vector<std::string>& names) {
  FVector v{t.carrier_ptr(), {}};
  for (const std::string& n : names) v.values.push_back(*t.carrier().find(n));
  return v;
}

GenVector gv(const FMatroid& fm, const std::vector<std::string>& names) {
  return as_gen_vector(fv(fm.tract(), names));
}

std::vector<FVector> reps(const FMatroid& fm, bool cocircuit) {
  return cocircuit ? fm.cocircuit_reps() : fm.circuit_reps();
}

void check_reps(const FMatroid& fm, bool cocircuit,
                const std::vector<std::vector<std::string>>& expected) {
  auto actual = reps(fm, cocircuit);
  REQUIRE(actual.size() == expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    INFO((cocircuit ? "cocircuit " : "circuit "), i);
    CHECK(actual[i] == fv(fm.tract(), expected[i]));
  }
}

}  // namespace

TEST_CASE("coordinate vectors") {
  Tract s = builtins::sign_tract();
  FVector x = fv(s, {"1", "-1", "0"});
  CHECK(x.support_mask() == 0b011);
  CHECK(x.str() == "(1,-1,0)");
  CHECK(x.scaled(s.carrier().epsilon()) == fv(s, {"-1", "1", "0"}));

  GenVector g = as_gen_vector(x);
  CHECK(g.support_mask() == 0b011);
  // coordinates render as formal sums
  CHECK(g.str() == "(1,(-1),0)");
  CHECK(g.coords[2].empty());
}

TEST_CASE("inner products apply the involution to the second factor") {
  Tract phase = builtins::phase();
  ElemId i = *phase.carrier().find("i");
  ElemId mi = *phase.carrier().find("-i");
  std::vector<ElemId> conj(phase.carrier().size());
  for (std::size_t e = 0; e < conj.size(); ++e) conj[e] = ElemId(e);
  conj[i] = mi;
  conj[mi] = i;
  Tract conj_phase(phase.carrier_ptr(), phase.null(),
                   Involution(phase.carrier_ptr(), conj), "conj_phase");

  GenVector xi = as_gen_vector(fv(conj_phase, {"i"}));
  FormalSum ip = inner_product(conj_phase, xi, xi);
  CHECK(ip == conj_phase.sum({"1"}));  // i * conj(i) = 1
  CHECK(!is_orthogonal(conj_phase, xi, xi));

  // without the conjugation the product is i * i = -1
  FormalSum plain = inner_product(phase, xi, xi);
  CHECK(plain == phase.sum({"-1"}));
}

TEST_CASE("signature invariants are diagnosed individually") {
  Tract s = builtins::sign_tract();
  Matroid u12 = Matroid::uniform(1, 2);

  auto zero_rep = check_f_signature({u12, {fv(s, {"0", "0"})}});
  CHECK(!zero_rep[0].holds);  // C0

  Matroid pairs = Matroid::uniform(2, 3).dual();
  auto proportional = check_f_signature(
      {pairs,
       {fv(s, {"1", "-1", "0"}), fv(s, {"-1", "1", "0"}),
        fv(s, {"0", "1", "-1"})}});
  CHECK(proportional[0].holds);
  CHECK(!proportional[1].holds);  // C1
  CHECK(!proportional[2].holds);  // C2: support {1,3} is missing

  auto bad_support = check_f_signature({u12, {fv(s, {"1", "0"})}});
  CHECK(bad_support[0].holds);
  CHECK(bad_support[1].holds);
  CHECK(!bad_support[2].holds);  // C2

  auto good = check_f_signature({u12, {fv(s, {"1", "1"})}});
  CHECK(all_hold(good));
}

TEST_CASE("lexicographically least dual pairs of the fixtures") {
  auto u12_sign = builtins::fixture("u12_sign");
  check_reps(u12_sign, false, {{"1", "1"}});
  check_reps(u12_sign, true, {{"1", "-1"}});

  auto u23_sign = builtins::fixture("u23_sign");
  check_reps(u23_sign, false, {{"1", "1", "1"}});
  check_reps(u23_sign, true,
             {{"1", "-1", "0"}, {"1", "0", "-1"}, {"0", "1", "-1"}});

  auto u24_sign = builtins::fixture("u24_sign");
  check_reps(u24_sign, false,
             {{"1", "1", "1", "0"},
              {"1", "1", "0", "1"},
              {"1", "0", "1", "-1"},
              {"0", "1", "-1", "1"}});
  check_reps(u24_sign, true,
             {{"1", "-1", "-1", "0"},
              {"1", "-1", "0", "1"},
              {"1", "0", "-1", "-1"},
              {"0", "1", "-1", "-1"}});

  auto u12_gf2 = builtins::fixture("u12_gf2");
  check_reps(u12_gf2, false, {{"1", "1"}});
  check_reps(u12_gf2, true, {{"1", "1"}});

  auto u23_gf2 = builtins::fixture("u23_gf2");
  check_reps(u23_gf2, false, {{"1", "1", "1"}});
  check_reps(u23_gf2, true, {{"1", "1", "0"}, {"1", "0", "1"}, {"0", "1", "1"}});

  auto u12_gf3 = builtins::fixture("u12_gf3");
  check_reps(u12_gf3, false, {{"1", "1"}});
  check_reps(u12_gf3, true, {{"1", "2"}});

  auto u23_gf3 = builtins::fixture("u23_gf3");
  check_reps(u23_gf3, false, {{"1", "1", "1"}});
  check_reps(u23_gf3, true, {{"1", "2", "0"}, {"1", "0", "2"}, {"0", "1", "2"}});

  auto u24_gf3 = builtins::fixture("u24_gf3");
  check_reps(u24_gf3, false,
             {{"1", "1", "1", "0"},
              {"1", "2", "0", "1"},
              {"1", "0", "2", "2"},
              {"0", "1", "2", "1"}});
  check_reps(u24_gf3, true,
             {{"1", "1", "1", "0"},
              {"1", "2", "0", "1"},
              {"1", "0", "2", "2"},
              {"0", "1", "2", "1"}});
}

TEST_CASE("every fixture passes the dual-pair axioms") {
  for (const std::string& key : builtins::fixture_names()) {
    INFO(key);
    auto reports = check_dual_pair(builtins::fixture(key));
    CHECK(reports.size() == 3);
    CHECK(all_hold(reports));
  }
}

TEST_CASE("no dual pair over gf2 for the four-point line") {
  CHECK(!find_dual_pair(Matroid::uniform(2, 4),
                        builtins::tract_by_name("gf2")));
  CHECK_THROWS_AS(builtins::fixture("u24_gf2"), std::invalid_argument);
  CHECK_THROWS_AS(builtins::fixture("nonsense"), std::invalid_argument);
}

TEST_CASE("dual pair over the product tract") {
  auto pair = find_dual_pair(Matroid::uniform(1, 2),
                             builtins::sign_product_tract());
  REQUIRE(pair);
  check_reps(*pair, false, {{"(1,1)", "(1,1)"}});
  check_reps(*pair, true, {{"(1,1)", "(-1,-1)"}});
  CHECK(all_hold(check_dual_pair(*pair)));
}

TEST_CASE("duality swaps the signatures") {
  auto fm = builtins::fixture("u23_sign");
  FMatroid d = fm.dual();
  CHECK(d.matroid() == fm.dual_matroid());
  CHECK(d.circuit_reps() == fm.cocircuit_reps());
  CHECK(d.cocircuit_reps() == fm.circuit_reps());
  CHECK(all_hold(check_dual_pair(d)));
}

TEST_CASE("generalized vector streams") {
  struct Row {
    const char* key;
    std::size_t n_vectors;
    std::size_t n_covectors;
  };
  const Row rows[] = {
      {"u12_gf2", 5, 5},    {"u12_gf3", 12, 12},  {"u12_sign", 20, 20},
      {"u23_gf2", 9, 14},   {"u23_gf3", 24, 72},  {"u23_sign", 60, 164},
      {"u24_gf3", 144, 144}, {"u24_sign", 656, 656}};
  for (const Row& r : rows) {
    INFO(r.key);
    auto fm = builtins::fixture(r.key);
    CHECK(gen_vectors(fm, 2).size() == r.n_vectors);
    CHECK(gen_covectors(fm, 2).size() == r.n_covectors);
  }
}

TEST_CASE("norm-one streams in deterministic order") {
  auto fm = builtins::fixture("u12_sign");

  auto vs = gen_vectors(fm, 1);
  REQUIRE(vs.size() == 3);
  CHECK(vs[0] == gv(fm, {"0", "0"}));
  CHECK(vs[1] == gv(fm, {"1", "1"}));
  CHECK(vs[2] == gv(fm, {"-1", "-1"}));

  auto cvs = gen_covectors(fm, 1);
  REQUIRE(cvs.size() == 3);
  CHECK(cvs[0] == gv(fm, {"0", "0"}));
  CHECK(cvs[1] == gv(fm, {"1", "-1"}));
  CHECK(cvs[2] == gv(fm, {"-1", "1"}));

  auto fvs = vectors(fm);
  REQUIRE(fvs.size() == 3);
  CHECK(fvs[1] == fv(fm.tract(), {"1", "1"}));
  auto fcvs = covectors(fm);
  REQUIRE(fcvs.size() == 3);
  CHECK(fcvs[2] == fv(fm.tract(), {"-1", "1"}));
}

TEST_CASE("wedge of two covectors") {
  auto fm = builtins::fixture("u23_sign");
  const Tract& t = fm.tract();
  GenVector x = gv(fm, {"1", "-1", "0"});
  GenVector y = gv(fm, {"1", "0", "-1"});

  GenVector w = wedge(t, x, y, 0);
  CHECK(w == gv(fm, {"0", "-1", "1"}));

  GenVector self = wedge(t, x, x, 0);
  CHECK(self.support_mask() == 0b010);
  CHECK(self.coords[1] == t.sum({"1", "-1"}));
}

TEST_CASE("series extension") {
  auto fm = builtins::fixture("u12_sign");
  FMatroid s = series_extend(fm, "1");

  CHECK(s.matroid().ground() == std::vector<std::string>{"2", "1a", "1b"});
  check_reps(s, false, {{"1", "1", "1"}});
  check_reps(s, true, {{"-1", "1", "0"}, {"-1", "0", "1"}, {"0", "1", "-1"}});
  CHECK(all_hold(check_dual_pair(s)));

  // contracting the duplicate recovers the one-circuit matroid
  CHECK(s.matroid().contracted("1b") ==
        Matroid::from_circuits({"2", "1a"}, {{"2", "1a"}}));
}

TEST_CASE("parallel extension") {
  auto fm = builtins::fixture("u12_sign");
  FMatroid p = parallel_extend(fm, "1");

  CHECK(p.matroid().ground() == std::vector<std::string>{"2", "1a", "1b"});
  check_reps(p, true, {{"-1", "1", "1"}});
  check_reps(p, false, {{"1", "1", "0"}, {"1", "0", "1"}, {"0", "1", "-1"}});
  CHECK(all_hold(check_dual_pair(p)));

  CHECK(p.matroid().deleted("1b") ==
        Matroid::from_circuits({"2", "1a"}, {{"2", "1a"}}));
}

TEST_CASE("expansion distributes long coordinates") {
  auto fm = builtins::fixture("u12_sign");
  const Tract& t = fm.tract();

  GenVector x{t.carrier_ptr(), {t.sum({"1", "-1"}), t.sum({"1"})}};
  GenVector y = gv(fm, {"1", "-1"});

  Expansion ex = expand_matroid(fm, x, y);
  CHECK(ex.fmatroid.matroid().ground() ==
        std::vector<std::string>{"2", "1a", "1b"});
  CHECK(ex.x_image == fv(t, {"1", "1", "-1"}));
  CHECK(ex.y_image == fv(t, {"-1", "1", "1"}));
  CHECK(all_hold(check_dual_pair(ex.fmatroid)));
  CHECK(inner_product(t, as_gen_vector(ex.x_image),
                      as_gen_vector(ex.y_image)) == inner_product(t, x, y));

  // a second long coordinate forces series copies as well
  GenVector y2{t.carrier_ptr(), {t.sum({"1", "-1"}), t.sum({"1"})}};
  Expansion ex2 = expand_matroid(fm, x, y2);
  CHECK(ex2.fmatroid.matroid().ground_size() == 5);
  CHECK(all_hold(check_dual_pair(ex2.fmatroid)));
  CHECK(inner_product(t, as_gen_vector(ex2.x_image),
                      as_gen_vector(ex2.y_image)) == inner_product(t, x, y2));
}

TEST_CASE("minors transform the signatures") {
  auto fm = builtins::fixture("u23_sign");

  FMatroid del = fm_deleted(fm, "1");
  CHECK(del.matroid() == Matroid::from_circuits({"2", "3"}, {}));
  CHECK(del.circuit_reps().empty());
  check_reps(del, true, {{"-1", "0"}, {"0", "-1"}});
  CHECK(all_hold(check_dual_pair(del)));

  FMatroid con = fm_contracted(fm, "1");
  CHECK(con.matroid() == Matroid::from_circuits({"2", "3"}, {{"2", "3"}}));
  check_reps(con, false, {{"1", "1"}});
  check_reps(con, true, {{"1", "-1"}});
  CHECK(all_hold(check_dual_pair(con)));
}
