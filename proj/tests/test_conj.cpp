#include <doctest.h>

#include "rigid/conj.hpp"

using namespace rigid;

namespace {

std::vector<std::string> labels(const ClassList& c) {
  std::vector<std::string> out;
  for (const auto& r : c.records()) out.push_back(r.label);
  return out;
}

}  // namespace

TEST_CASE("descent to minimal length") {
  AffineWeyl aw(preset("sl2"));
  int s0 = aw.affine_indices()[0];
  ExtAffElt e = aw.mul(aw.mul(aw.simple(0), aw.simple(s0)), aw.simple(0));
  CHECK(aw.length(e) == 3);
  auto d = descend_to_minimal(aw, e);
  CHECK(d.min_length == 1);
  REQUIRE(d.min_reps.size() == 1);
  CHECK(d.min_reps[0] == aw.simple(s0));
  CHECK(d.path == std::vector<std::string>{"s1"});
  CHECK(descend_to_minimal(aw, aw.identity()).min_length == 0);
  AffineWeyl c2(preset("c2-aff"));
  ExtAffElt p = c2.mul(c2.simple(c2.affine_indices()[0]), c2.simple(0));
  CHECK(descend_to_minimal(c2, p).min_reps.size() == 2);
  CHECK_THROWS_AS(descend_to_minimal(c2, p, 0), Error);
}

TEST_CASE("newton-zero classes of the presets") {
  AffineWeyl sl2(preset("sl2"));
  auto c = newton_zero_classes(sl2);
  CHECK(labels(c) == std::vector<std::string>{"1", "s0", "s1"});

  AffineWeyl pgl2(preset("pgl2"));
  CHECK(labels(newton_zero_classes(pgl2)) == std::vector<std::string>{"1", "tau", "s1"});

  AffineWeyl c2(preset("c2-aff"));
  auto cc = newton_zero_classes(c2);
  CHECK(cc.size() == 9);
  CHECK(cc.num_elliptic() == 5);
  for (const char* l : {"s1s2", "s1s2s1s2", "s0s2", "s0s1", "s0s1s0s1"}) {
    CAPTURE(l);
    int i = cc.index_of_label(l);
    REQUIRE(i >= 0);
    CHECK(cc[i].elliptic);
  }
  AffineWeyl ext(preset("c2-ext"));
  auto ce = newton_zero_classes(ext);
  for (const auto& r : ce.records()) CHECK(r.newton.is_zero());
}

TEST_CASE("minimality certificate and omega closure") {
  for (const char* name : {"sl2", "pgl2", "c2-aff", "c2-ext"}) {
    CAPTURE(name);
    AffineWeyl aw(preset(name));
    auto classes = newton_zero_classes(aw);
    for (const auto& r : classes.records()) {
      for (const auto& e : r.min_reps) {
        CHECK(aw.length(e) == r.min_length);
        for (const auto& s : aw.simples()) CHECK(aw.length(aw.conj(s.elt, e)) >= r.min_length);
        for (const auto& o : aw.omega()) CHECK(classes.index_of_min(aw.conj(o, e)) == classes.index_of_min(e));
        CHECK(aw.is_elliptic(e) == r.elliptic);
      }
    }
  }
}

TEST_CASE("classify") {
  AffineWeyl aw(preset("sl2"));
  auto classes = newton_zero_classes(aw);
  int s0 = aw.affine_indices()[0];
  ExtAffElt e = aw.mul(aw.mul(aw.simple(0), aw.simple(s0)), aw.simple(0));
  CHECK(classes[classify(aw, e, classes)].label == "s0");
  CHECK(classes[classify(aw, aw.identity(), classes)].label == "1");
  CHECK_THROWS_AS(classify(aw, aw.translation({2}), classes), Error);

  AffineWeyl pgl2(preset("pgl2"));
  auto pc = newton_zero_classes(pgl2);
  const auto& tau = pgl2.omega()[1];
  for (const auto& s : pgl2.simples()) {
    CHECK(classify(pgl2, pgl2.conj(tau, s.elt), pc) == classify(pgl2, s.elt, pc));
  }
}

TEST_CASE("brute-force oracle") {
  AffineWeyl aw(preset("sl2"));
  int s0 = aw.affine_indices()[0];
  for (int L = 0; L <= 10; ++L) CHECK_FALSE(brute_force_conjugacy_oracle(aw, aw.simple(s0), aw.simple(0), L));
  ExtAffElt e = aw.mul(aw.mul(aw.simple(0), aw.simple(s0)), aw.simple(0));
  CHECK(brute_force_conjugacy_oracle(aw, e, aw.simple(s0), 1));
  CHECK(brute_force_conjugacy_oracle(aw, e, e, 0));
}

TEST_CASE("graph classes agree with the oracle on radius-6 balls") {
  for (const char* name : {"sl2", "pgl2", "c2-aff", "c2-ext"}) {
    CAPTURE(name);
    AffineWeyl aw(preset(name));
    auto classes = newton_zero_classes(aw);
    std::vector<ExtAffElt> elts;
    for (const auto& e : aw.ball(6)) {
      if (aw.finite_order(e) && aw.length(e) <= 4) elts.push_back(e);
    }
    auto ball = aw.ball(6);
    std::vector<int> cls;
    for (const auto& e : elts) cls.push_back(classify(aw, e, classes));
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (std::size_t j = i + 1; j < elts.size(); ++j) {
        bool found = false;
        for (const auto& g : ball) {
          if (aw.conj(g, elts[i]) == elts[j]) {
            found = true;
            break;
          }
        }
        CHECK(found == (cls[i] == cls[j]));
      }
    }
  }
}

TEST_CASE("count identity") {
  struct Expect {
    const char* name;
    std::size_t total;
  };
  for (auto e : {Expect{"sl2", 3}, Expect{"pgl2", 3}, Expect{"c2-aff", 9}, Expect{"c2-ext", 0}}) {
    CAPTURE(e.name);
    AffineWeyl aw(preset(e.name));
    auto classes = newton_zero_classes(aw);
    auto report = count_identity_check(aw, classes);
    CHECK(report.holds);
    if (e.total) CHECK(report.total == e.total);
  }
  AffineWeyl c2(preset("c2-aff"));
  auto report = count_identity_check(c2, newton_zero_classes(c2));
  REQUIRE(report.terms.size() == 4);
  std::vector<std::size_t> terms;
  for (const auto& t : report.terms) terms.push_back(t.elliptic_classes);
  CHECK(terms == std::vector<std::size_t>{1, 1, 2, 5});
  CHECK(report.quotient_total == 10);
}
