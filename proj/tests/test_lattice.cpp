#include <doctest.h>

#include <random>

#include "rigid/rootdata.hpp"

using namespace rigid;

TEST_CASE("smith normal form reconstructs the input") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
    IntMat a(rows, IntVec(cols));
    for (auto& r : a) {
      for (auto& v : r) v = entry(rng);
    }
    SmithForm f = smith_normal_form(a, rows, cols);
    IntMat uav = mat_mul(mat_mul(f.U, a), f.V);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t expected = (i == j && i < f.rank) ? f.diag[i] : 0;
        CHECK(uav[i][j] == expected);
      }
    }
    for (std::size_t i = 1; i < f.rank; ++i) CHECK(f.diag[i] % f.diag[i - 1] == 0);
    CHECK(f.rank == rank_int(a));
  }
}

TEST_CASE("integer solutions") {
  IntMat a = {{2, 0}, {0, 1}};
  CHECK(solve_integer(a, 2, {4, 3}) == IntVec{2, 3});
  CHECK_FALSE(solve_integer(a, 2, {3, 3}).has_value());
  auto r = solve_rational(a, 2, {3, 3});
  REQUIRE(r.has_value());
  CHECK((*r)[0] == Rational(3, 2));
  CHECK(to_string(IntVec{1, -2}) == "[1,-2]");
}

TEST_CASE("root systems of the presets") {
  struct Expect {
    const char* name;
    std::size_t roots;
  };
  for (auto e : {Expect{"sl2", 2}, Expect{"pgl2", 2}, Expect{"c2-aff", 8}, Expect{"c2-ext", 8}}) {
    auto d = preset(e.name);
    auto rs = generate_root_system(d);
    CHECK(rs.roots.size() == e.roots);
    CHECK(rs.num_positive() * 2 == e.roots);
    for (std::size_t b = 0; b < rs.roots.size(); ++b) CHECK(dot(rs.roots[b], rs.coroots[b]) == 2);
  }
  CHECK(validate_datum(preset("c2-aff")) == 8);
  CHECK_THROWS_AS(preset("g2"), Error);
}

TEST_CASE("datum validation errors") {
  auto kind_of = [](const BasedRootDatum& d) {
    try {
      generate_root_system(d);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  BasedRootDatum bad{"bad", 1, {{1}}, {{1}}, {}};
  CHECK(kind_of(bad) == ErrorKind::NotCartan);
  BasedRootDatum affine_a1{"a1a", 2, {{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}, {}};
  CHECK(kind_of(affine_a1) != ErrorKind::InvalidArgument);
}

TEST_CASE("datum json parsing") {
  auto d = parse_datum_json(R"({"name":"x","lattice_rank":1,"simple_roots":[[2]],"simple_coroots":[[1]]})");
  CHECK(d.m == 1);
  CHECK(d.simple_roots[0] == IntVec{2});
  CHECK_THROWS_AS(parse_datum_json("{\"name\": }"), Error);
  CHECK_THROWS_AS(parse_datum_json(R"({"name":"x","lattice_rank":1,"simple_roots":[[2]],"simple_coroots":[[1]],"extra":1})"),
                  Error);
  try {
    parse_datum_json(R"({"name":"x","lattice_rank":1,"simple_roots":[["a"]],"simple_coroots":[[1]]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("simple_roots") != std::string::npos);
  }
}

TEST_CASE("semisimple quotient and cotwist coordinates") {
  auto d = preset("c2-aff");
  auto q1 = semisimple_quotient(d, 0b01);
  CHECK(q1.datum.m == 1);
  CHECK(q1.datum.rank() == 1);
  CHECK(dot(q1.datum.simple_roots[0], q1.datum.simple_coroots[0]) == 2);
  auto p = cotwist_coordinates(d, 0b01);
  REQUIRE(p.size() == 1);
  CHECK(dot(p[0], d.simple_roots[0]) == 0);
  auto full = semisimple_quotient(d, 0b11);
  CHECK(full.datum.m == 2);
  CHECK(cotwist_coordinates(d, 0b11).empty());
  CHECK(cotwist_coordinates(d, 0).size() == 2);
}
