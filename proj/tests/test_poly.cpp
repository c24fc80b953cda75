#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace rigid;

namespace {

VarTablePtr make_vars() {
  return VarTable::make({{"v0", VarKind::ParamSqrt, "Q0"},
                         {"v1", VarKind::ParamSqrt, "Q1"},
                         {"z1", VarKind::Twist, ""}});
}

LaurentPoly random_poly(std::mt19937& rng, const VarTablePtr& vars, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Term t;
    for (std::size_t v = 0; v < vars->size(); ++v) t.exps[v] = expo(rng);
    t.coeff = Rational(coeff(rng), 1 + (i % 2));
    terms.push_back(t);
  }
  return LaurentPoly::from_terms(vars, terms);
}

// Cofactor expansion along the first row.
LaurentPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  LaurentPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor(i - 1, cc++) = m(i, j);
      }
    }
    LaurentPoly term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

TEST_CASE("ring identities from the examples") {
  auto vars = VarTable::make({{"v", VarKind::ParamSqrt, "Q"}});
  auto v = LaurentPoly::variable(vars, 0);
  CHECK((v + 1) * (v - 1) == v * v - 1);
  CHECK(v.pow(-1) * v == LaurentPoly::constant(1, vars));

  auto qvars = VarTable::make({{"Q", VarKind::Param, ""}});
  auto q = LaurentPoly::variable(qvars, 0);
  CHECK((q * q - 1).divide_exact(q - 1) == q + 1);
  CHECK_FALSE((q * q + 1).try_divide(q - 1).has_value());
  CHECK_THROWS_AS((q + 1).divide_exact(LaurentPoly()), Error);
}

TEST_CASE("laurent division handles negative exponents") {
  auto vars = VarTable::make({{"a", VarKind::Param, ""}, {"b", VarKind::Param, ""}});
  auto a = LaurentPoly::variable(vars, 0);
  auto b = LaurentPoly::variable(vars, 1);
  LaurentPoly f = a.pow(-2) + b - a * b.pow(-1);
  LaurentPoly g = a - b.pow(3) + 2;
  CHECK((f * g).divide_exact(g) == f);
  CHECK((f * g).divide_exact(f) == g);
  CHECK_FALSE((f * g + 1).try_divide(g).has_value());
}

TEST_CASE("variable table mismatch is rejected") {
  auto t1 = VarTable::make({{"a", VarKind::Param, ""}});
  auto t2 = VarTable::make({{"b", VarKind::Param, ""}});
  auto a = LaurentPoly::variable(t1, 0);
  auto b = LaurentPoly::variable(t2, 0);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VarTableMismatch);
  }
}

TEST_CASE("ring axioms on random sparse polynomials") {
  std::mt19937 rng(7);
  auto vars = make_vars();
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, vars);
    auto b = random_poly(rng, vars);
    auto c = random_poly(rng, vars);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("evaluate") {
  auto qvars = VarTable::make({{"Q", VarKind::Param, ""}});
  auto q = LaurentPoly::variable(qvars, 0);
  CHECK(evaluate(q + 1, {{0, LaurentPoly(2)}}) == LaurentPoly(3));

  auto two = VarTable::make({{"q0", VarKind::Param, ""}, {"q1", VarKind::Param, ""}});
  auto q0 = LaurentPoly::variable(two, 0);
  auto q1 = LaurentPoly::variable(two, 1);
  CHECK(evaluate(q0 + q1, {{0, LaurentPoly(1)}}) == q1 + 1);

  auto vv = VarTable::make({{"v", VarKind::ParamSqrt, "Q"}});
  auto v = LaurentPoly::variable(vv, 0);
  CHECK(evaluate(v * v, {{0, LaurentPoly(3)}}) == LaurentPoly(9));
  CHECK_THROWS_AS(evaluate(v, {{0, LaurentPoly()}}), Error);
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937 rng(11);
  auto vars = make_vars();
  std::uniform_int_distribution<int> val(1, 6);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, vars);
    auto b = random_poly(rng, vars);
    std::vector<Substitution> s = {{0, LaurentPoly(Rational(val(rng), 2))},
                                   {2, LaurentPoly(val(rng)) * LaurentPoly::variable(vars, 1)}};
    CHECK(evaluate(a * b, s) == evaluate(a, s) * evaluate(b, s));
    CHECK(evaluate(a + b, s) == evaluate(a, s) + evaluate(b, s));
  }
}

TEST_CASE("render_in_q") {
  auto vars = make_vars();
  auto v0 = LaurentPoly::variable(vars, 0);
  auto v1 = LaurentPoly::variable(vars, 1);
  CHECK(to_compact_string(render_in_q(v1 * v1 - 1)) == "Q1-1");
  CHECK(to_compact_string(render_in_q(v0 * v0 * v1 * v1)) == "Q0*Q1");
  CHECK_THROWS_AS(render_in_q(v1), Error);
  auto p = v0 * v0 - 3 * v1.pow(-2);
  CHECK(lift_from_q(render_in_q(p), vars) == p);
}

TEST_CASE("canonical and compact rendering") {
  auto qv = VarTable::make({{"Q0", VarKind::Param, ""}, {"Q1", VarKind::Param, ""}});
  auto q0 = LaurentPoly::variable(qv, 0);
  auto q1 = LaurentPoly::variable(qv, 1);
  LaurentPoly p = -q0.pow(3) + 2 * q0 * q0 * q1;
  CHECK(to_string(p) == "-1*Q0^3 + 2*Q0^2*Q1");
  CHECK(to_compact_string(p) == "-Q0^3+2*Q0^2*Q1");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(q1 - 1) == "1*Q1 - 1");
}

TEST_CASE("parse_poly round trip") {
  std::mt19937 rng(3);
  auto vars = make_vars();
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, vars);
    CHECK(parse_poly(to_string(a), vars) == a);
    CHECK(parse_poly(to_compact_string(a), vars) == a);
  }
  CHECK_THROWS_AS(parse_poly("v0 + w", vars), Error);
  CHECK_THROWS_AS(parse_poly("(v0", vars), Error);
  auto sub = parse_assignment("v0=2, z1=3/4", vars);
  REQUIRE(sub.size() == 2);
  CHECK(sub[1].value == LaurentPoly(Rational(3, 4)));
  CHECK_THROWS_AS(parse_assignment("nope=1", vars), Error);
}

TEST_CASE("det_bareiss examples") {
  auto qv = VarTable::make({{"Q", VarKind::Param, ""}});
  auto q = LaurentPoly::variable(qv, 0);
  PolyMatrix m(2, 2);
  m(0, 0) = q;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = q;
  CHECK(det_bareiss(m) == q * q - 1);

  PolyMatrix sl2(3, 3);
  LaurentPoly rows[3][3] = {{-1, -1, q - 1}, {-1, q, q - 1}, {1, 1, 2}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) sl2(i, j) = rows[i][j];
  }
  CHECK(det_bareiss(sl2) == -(q + 1) * (q + 1));

  PolyMatrix rep(3, 3);
  for (int j = 0; j < 3; ++j) {
    rep(0, j) = q + j;
    rep(1, j) = q * q - j;
    rep(2, j) = q + j;
  }
  CHECK(det_bareiss(rep).is_zero());
  CHECK_THROWS_AS(det_bareiss(PolyMatrix(2, 3)), Error);
}

TEST_CASE("det_bareiss agrees with cofactor expansion") {
  std::mt19937 rng(19);
  auto vars = make_vars();
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, vars, 2);
      }
      CHECK(det_bareiss(m) == det_cofactor(m));
    }
  }
}

TEST_CASE("det_bareiss commutes with numeric evaluation") {
  std::mt19937 rng(23);
  auto vars = make_vars();
  std::vector<Substitution> point = {{0, LaurentPoly(2)}, {1, LaurentPoly(Rational(3, 2))}, {2, LaurentPoly(-5)}};
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_poly(rng, vars, 3);
    }
    Rational expected = det_rational(to_rational_matrix(evaluate(m, point)));
    CHECK(evaluate(det_bareiss(m), point).constant_value() == expected);
  }
}

TEST_CASE("rational rank") {
  std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank_rational(m) == 2);
  CHECK(det_rational(m) == 0);
}
