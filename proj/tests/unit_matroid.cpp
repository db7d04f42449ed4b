#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tractlab/matroid.hpp"

using namespace tractlab;

TEST_CASE("uniform matroids") {
  Matroid u23 = Matroid::uniform(2, 3);
  CHECK(u23.ground() == std::vector<std::string>{"1", "2", "3"});
  CHECK(u23.ground_size() == 3);
  CHECK(u23.element_index("2") == 1);
  CHECK(u23.element_index("7") == -1);
  CHECK(u23.circuit_masks() == std::vector<std::uint32_t>{0b111});
  CHECK(u23.rank() == 2);
  CHECK(u23.is_independent(0b011));
  CHECK(!u23.is_independent(0b111));
  CHECK(u23.bases() == std::vector<std::uint32_t>{0b011, 0b101, 0b110});

  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.bases().size() == 6);
  CHECK(u24.circuit_masks().size() == 4);
}

TEST_CASE("circuit axiom validation") {
  CHECK_THROWS_AS(Matroid::from_circuits({"a", "b"}, {{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Matroid::from_circuits({"a", "b"}, {{"a", "c"}}),
                  std::invalid_argument);
  // not an antichain
  CHECK_THROWS_AS(Matroid::from_circuits({"a", "b"}, {{"a"}, {"a", "b"}}),
                  std::invalid_argument);
  // weak elimination fails: {a,b} and {b,c} demand a circuit inside {a,c}
  CHECK_THROWS_AS(
      Matroid::from_circuits({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
      std::invalid_argument);
  CHECK_THROWS_AS(Matroid::from_circuits({"a", "a"}, {}),
                  std::invalid_argument);
}

TEST_CASE("canonical circuit order") {
  Matroid m = Matroid::from_circuits(
      {"a", "b", "c", "d"}, {{"c", "d"}, {"a", "b"}});
  CHECK(m.circuits() ==
        std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
  CHECK(m.circuit_masks() == std::vector<std::uint32_t>{0b0011, 0b1100});
  CHECK(m.rank() == 2);
}

TEST_CASE("free matroids have no circuits") {
  Matroid f = Matroid::from_circuits({"x", "y"}, {});
  CHECK(f.rank() == 2);
  CHECK(f.bases() == std::vector<std::uint32_t>{0b11});
  Matroid rank0 = f.dual();
  CHECK(rank0.rank() == 0);
  CHECK(rank0.circuit_masks() == std::vector<std::uint32_t>{0b01, 0b10});
}

TEST_CASE("duality") {
  Matroid u12 = Matroid::uniform(1, 2);
  CHECK(u12.dual() == u12);

  Matroid u23 = Matroid::uniform(2, 3);
  Matroid d = u23.dual();
  CHECK(d.ground() == u23.ground());
  CHECK(d.circuit_masks() ==
        std::vector<std::uint32_t>{0b011, 0b101, 0b110});
  CHECK(d.dual() == u23);

  CHECK(Matroid::uniform(2, 4).dual() == Matroid::uniform(2, 4));
}

TEST_CASE("deletion and contraction") {
  Matroid u24 = Matroid::uniform(2, 4);

  Matroid del = u24.deleted("4");
  CHECK(del.ground() == std::vector<std::string>{"1", "2", "3"});
  CHECK(del == Matroid::uniform(2, 3));

  Matroid con = u24.contracted("1");
  CHECK(con.ground() == std::vector<std::string>{"2", "3", "4"});
  CHECK(con.rank() == 1);
  CHECK(con.circuit_masks() ==
        std::vector<std::uint32_t>{0b011, 0b101, 0b110});

  CHECK_THROWS_AS(u24.deleted("9"), std::invalid_argument);
}

TEST_CASE("ground set size cap") {
  CHECK(Matroid::uniform(1, 20).ground_size() == 20);
  CHECK_THROWS_AS(Matroid::uniform(1, 21), std::invalid_argument);
}
