#include <doctest.h>

#include <set>

#include "rigid/repn.hpp"
#include "support.hpp"

using namespace rigid;

namespace {

HeckeAlgebraPtr algebra(const char* name) { return HeckeAlgebra::make(std::make_shared<AffineWeyl>(preset(name))); }

std::set<std::string> signatures(const std::vector<ModulePtr>& ms) {
  std::set<std::string> out;
  for (const auto& M : ms) {
    std::string s;
    for (const auto& [k, v] : M->info().signature) s += k + "=" + to_string(v) + ";";
    out.insert(s);
  }
  return out;
}

ModulePtr trivial_theta(const HeckeAlgebraPtr& H) {
  auto ms = one_dim_modules(H, 0, false);
  REQUIRE(ms.size() == 1);
  return ms[0];
}

}  // namespace

TEST_CASE("one-dimensional modules") {
  struct Case {
    const char* name;
    std::size_t count;
  };
  for (Case c : {Case{"sl2", 4}, Case{"pgl2", 4}, Case{"c2-aff", 8}, Case{"c2-ext", 8}}) {
    CAPTURE(c.name);
    auto H = algebra(c.name);
    auto ms = one_dim_modules(H, H->weyl().all(), false);
    CHECK(ms.size() == c.count);
    CHECK(signatures(ms).size() == c.count);
    for (const auto& M : ms) CHECK_NOTHROW(verify_relations(*M));
  }
  auto H = algebra("sl2");
  auto sig = signatures(one_dim_modules(H, H->weyl().all(), false));
  CHECK(sig.count("T0=-1;T1=-1;") == 1);
  CHECK(sig.count("T0=1*v0^2;T1=1*v1^2;") == 1);
}

TEST_CASE("proper level one-dimensional modules carry twists") {
  auto H = algebra("c2-aff");
  auto ms = one_dim_modules(H, 1U << 1, true);
  CHECK(ms.size() == 4);
  for (const auto& M : ms) {
    CHECK(M->info().twist == "symbolic");
    CHECK(M->data().theta[0](0, 0).involves_kind(VarKind::Twist));
  }
}

TEST_CASE("corrupted module is rejected") {
  auto H = algebra("sl2");
  auto ms = one_dim_modules(H, H->weyl().all(), false);
  ModuleData d = ms[0]->data();
  d.T[0] = PolyMatrix::scalar(1, LaurentPoly(2));
  CHECK_THROWS_AS(certified(H, d), Error);
  d = ms[0]->data();
  d.theta[0] = d.theta[0] * PolyMatrix::scalar(1, LaurentPoly(-1));
  d.theta_inv[0] = d.theta_inv[0] * PolyMatrix::scalar(1, LaurentPoly(-1));
  try {
    certified(H, d);
    FAIL("expected RelationFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationFailed);
  }
}

TEST_CASE("finite C2 lift") {
  auto H = algebra("c2-aff");
  auto irreps = finite_c2_irreps(H->Q(0), H->Q(1));
  const auto& two = irreps.back();
  CHECK((two.Ta * two.Tb).trace().is_zero());
  PolyMatrix ab = two.Ta * two.Tb;
  CHECK((ab * ab).trace() == LaurentPoly(-2) * H->Q(0) * H->Q(1));
  auto M = lift_from_parahoric(H, {{0, two.Ta}, {1, two.Tb}}, {{2, LaurentPoly(-1)}}, "1x1");
  CHECK(M->dim() == 2);
  CHECK(M->info().signature.at("T1") == H->Q(0) - 1);
  CHECK(M->info().signature.at("T0") == LaurentPoly(-2));
  for (const auto& f : irreps) {
    CAPTURE(f.name);
    CHECK_NOTHROW(lift_from_parahoric(H, {{0, f.Ta}, {1, f.Tb}}, {{2, LaurentPoly(-1)}}, f.name));
  }
}

TEST_CASE("induced modules") {
  auto sl2 = algebra("sl2");
  auto I = induce(*trivial_theta(sl2), sl2->weyl().all());
  CHECK(I->dim() == 2);
  CHECK(I->info().signature.at("T1") == sl2->Q(0) - 1);

  auto c2 = algebra("c2-aff");
  auto Ic = induce(*trivial_theta(c2), c2->weyl().all());
  CHECK(Ic->dim() == 8);
  CHECK(Ic->info().signature.at("T0") == LaurentPoly(4) * c2->Q(2) - 4);

  auto pi = one_dim_modules(c2, 1U << 1, false);
  for (const auto& p : pi) {
    auto M = induce(*p, c2->weyl().all());
    CHECK(M->dim() == 4);
  }
}

TEST_CASE("restriction, twists and Mackey") {
  auto H = algebra("c2-aff");
  const auto& W = H->weyl().W();
  auto triv = trivial_theta(H);
  for (Subset K : {Subset{1}, Subset{2}}) {
    auto I = induce(*triv, K);
    CHECK(I->dim() == 2);
    auto R = restrict_to(*I, 0);
    // Mackey: r_0 i_K(1) is the sum of w-twists over W_K.
    LaurentPoly lhs = R->trace(H->theta({1, 0}));
    LaurentPoly rhs;
    for (int w : W.parabolic_elements(K)) rhs += twist_by(*triv, w)->trace(H->theta({1, 0}));
    CHECK(lhs == rhs);
  }
  for (const auto& sigma : one_dim_modules(H, 1U << 1, true)) {
    for (int w : W.double_coset_reps(1U << 1, 1U << 1)) {
      auto image = W.image_subset(w, 1U << 1);
      if (!image) continue;
      auto tw = twist_by(*sigma, w);
      CHECK(tw->level() == *image);
      auto a = induce(*sigma, H->weyl().all());
      auto b = induce(*tw, H->weyl().all());
      for (const auto& w2 : H->weyl().ball(2)) CHECK(a->trace(H->T(w2)) == b->trace(H->T(w2)));
    }
  }
}

TEST_CASE("A-operator") {
  auto H = algebra("sl2");
  CHECK(normalizer_size(H->weyl().W(), 0) == 2);
  CHECK(normalizer_size(H->weyl().W(), 1) == 1);
  auto ms = one_dim_modules(H, H->weyl().all(), false);
  for (const auto& M : ms) {
    for (const auto& w : H->weyl().ball(2)) {
      BernElt h = H->to_bernstein(H->T(w));
      BernElt once = a_adjoint(*H, h);
      CHECK(M->trace(a_adjoint(*H, once)) == LaurentPoly(-2) * M->trace(once));
    }
  }
  auto c2 = algebra("c2-aff");
  BernElt h = c2->to_bernstein(c2->T(c2->weyl().simple(2)));
  CHECK(a_adjoint(*c2, h, false) == a_adjoint(*c2, h, true));
}
