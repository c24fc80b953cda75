#include <doctest.h>

#include <set>

#include "rigid/weyl.hpp"

using namespace rigid;

TEST_CASE("preset certificates") {
  struct Expect {
    const char* name;
    std::size_t W, omega, orbits;
    std::vector<bool> flags;
  };
  for (const auto& e : {Expect{"sl2", 2, 1, 2, {true}}, Expect{"pgl2", 2, 2, 1, {false}},
                        Expect{"c2-aff", 8, 1, 3, {false, true}}, Expect{"c2-ext", 8, 2, 2, {false, false}}}) {
    CAPTURE(e.name);
    AffineWeyl aw(preset(e.name));
    CHECK(aw.W().size() == e.W);
    CHECK(aw.omega().size() == e.omega);
    CHECK(aw.orbits().size() == e.orbits);
    for (std::size_t i = 0; i < aw.rank(); ++i) CHECK(aw.two_xvee(i) == e.flags[i]);
    for (const auto& s : aw.simples()) CHECK(aw.length(s.elt) == 1);
    for (const auto& o : aw.omega()) CHECK(aw.length(o) == 0);
  }
}

TEST_CASE("orbit names") {
  AffineWeyl sl2(preset("sl2"));
  CHECK(sl2.orbits()[0].name == "0");
  CHECK(sl2.orbits()[1].name == "1");
  AffineWeyl c2(preset("c2-aff"));
  CHECK(c2.orbits()[0].name == "0");
  CHECK(c2.coxeter(0, 1) == 4);
  CHECK(c2.coxeter(2, 1) == 2);
  AffineWeyl ext(preset("c2-ext"));
  // The Omega-fixed reflection is the middle node of the chain s1 - s2 - s0.
  REQUIRE(ext.orbits().size() == 2);
  CHECK(ext.orbits()[0].members.size() == 2);
  CHECK(ext.orbits()[1].members == std::vector<int>{1});
  CHECK(ext.coxeter(1, 0) == 4);
  CHECK(ext.coxeter(1, 2) == 4);
  CHECK(ext.coxeter(0, 2) == 2);
  CHECK(ext.omega_conj(1, 0) == 2);
  CHECK(ext.omega_names()[1] == "tau");
}

TEST_CASE("sl2 affine reflection") {
  AffineWeyl aw(preset("sl2"));
  const auto& s0 = aw.simple(aw.affine_indices()[0]);
  CHECK(s0.x == IntVec{1});
  CHECK(aw.length(aw.translation({1})) == 2);
  CHECK(aw.length(aw.translation({3})) == 6);
  CHECK(aw.render(s0) == "t[1]*s1");
  CHECK(aw.render_word(aw.mul(s0, aw.simple(0))) == "s0s1");
  CHECK(aw.render_word(aw.identity()) == "1");
  CHECK(aw.ball(2).size() == 5);
  CHECK(aw.parse_word("s0,s1") == aw.mul(s0, aw.simple(0)));
  CHECK_THROWS_AS(aw.parse_word("s7"), Error);
}

TEST_CASE("pgl2 omega") {
  AffineWeyl aw(preset("pgl2"));
  CHECK(aw.ball(0).size() == 2);
  const auto& tau = aw.omega()[1];
  CHECK(aw.mul(tau, tau) == aw.identity());
  CHECK(aw.omega_conj(1, 0) == aw.affine_indices()[0]);
  CHECK(aw.render_word(aw.mul(aw.simple(0), tau)) == "s1tau");
}

TEST_CASE("length agrees with breadth-first word length") {
  for (const char* name : {"sl2", "pgl2", "c2-aff", "c2-ext"}) {
    CAPTURE(name);
    AffineWeyl aw(preset(name));
    const int L = 8;
    auto bfs = aw.bfs_lengths(L);
    auto ball = aw.ball(L);
    CHECK(ball.size() == bfs.size());
    for (const auto& [e, d] : bfs) CHECK(aw.length(e) == d);
    std::set<ExtAffElt> from_ball(ball.begin(), ball.end());
    for (const auto& [e, d] : bfs) CHECK(from_ball.count(e) == 1);
    for (const auto& e : ball) {
      auto [word, o] = aw.reduced_word(e);
      CHECK(static_cast<int>(word.size()) == aw.length(e));
      CHECK(aw.from_word(word, o) == e);
    }
  }
}

TEST_CASE("length is invariant under inversion and omega conjugation") {
  AffineWeyl aw(preset("c2-ext"));
  for (const auto& e : aw.ball(5)) {
    CHECK(aw.length(aw.inv(e)) == aw.length(e));
    for (const auto& o : aw.omega()) CHECK(aw.length(aw.conj(o, e)) == aw.length(e));
  }
}

TEST_CASE("finite Weyl group of C2") {
  AffineWeyl aw(preset("c2-aff"));
  const auto& W = aw.W();
  CHECK(W.min_coset_reps(0b01).size() == 4);
  CHECK(W.double_coset_reps(0b01, 0b10).size() == 2);
  for (std::size_t w = 0; w < W.size(); ++w) {
    auto [u, wj] = W.coset_factor(static_cast<int>(w), 0b10);
    CHECK(W.mul(u, wj) == static_cast<int>(w));
    CHECK(W.in_parabolic(wj, 0b10));
    CHECK(W.length(u) + W.length(wj) == W.length(static_cast<int>(w)));
    CHECK(W.mul(static_cast<int>(w), W.inv(static_cast<int>(w))) == 0);
    CHECK(static_cast<int>(W.word(static_cast<int>(w)).size()) == W.length(static_cast<int>(w)));
  }
  int w0 = W.from_word({0, 1, 0, 1});
  CHECK(W.length(w0) == 4);
  CHECK(W.order(W.from_word({0, 1})) == 4);
}

TEST_CASE("newton points and ellipticity") {
  AffineWeyl aw(preset("c2-aff"));
  auto t = aw.translation({1, 0});
  auto nu = aw.newton_point(t);
  CHECK(nu.nu == RatVec{1, 0});
  CHECK(nu.J == 0b10);
  CHECK_FALSE(aw.finite_order(t));
  CHECK_FALSE(aw.is_elliptic(t));
  auto cox = aw.mul(aw.simple(0), aw.simple(1));
  CHECK(aw.is_elliptic(cox));
  CHECK(aw.finite_order(cox));
  CHECK(aw.newton_point(cox).is_zero());
  CHECK_FALSE(aw.is_elliptic(aw.simple(0)));
}

TEST_CASE("non-semisimple datum is rejected") {
  BasedRootDatum gl2{"gl2", 2, {{1, -1}}, {{1, -1}}, {}};
  CHECK_THROWS_AS(AffineWeyl{gl2}, Error);
}
