#include <doctest.h>

#include <fstream>
#include <sstream>

#include "published_tables.hpp"
#include "rigid/rigidtab.hpp"
#include "support.hpp"

using namespace rigid;

namespace {

Workspace& workspace(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Workspace>(preset(name), name);
  return *slot;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("published tables entry by entry") {
  for (const auto& t : published::tables()) {
    CAPTURE(t.preset);
    std::string first;
    CHECK_MESSAGE(published::mismatches(t, workspace(t.preset).table(), &first) == 0, first);
  }
}

TEST_CASE("a corrupted entry is detected") {
  published::Table t = published::tables().at(0);
  t.entries[0][2] = "q-2";
  std::string first;
  CHECK(published::mismatches(t, workspace("sl2").table(), &first) == 1);
  CHECK(first.find("T0, i_{}(1)") == 0);
}

TEST_CASE("determinants") {
  for (const char* name : {"sl2", "pgl2", "c2-aff", "c2-ext"}) {
    CAPTURE(name);
    auto& ws = workspace(name);
    const auto& m = *ws.manifest();
    Check c = determinant_check(ws.table(), m.determinant, m.identify, m.determinant_up_to_scalar);
    CHECK_MESSAGE(c.pass, c.detail);
  }
  Rational constant;
  Check s = specialization_check_extended_c2(workspace("c2-aff").table(), &constant);
  CHECK_MESSAGE(s.pass, s.detail);
  CHECK(constant == -8);
}

TEST_CASE("wrong determinant fails") {
  auto& ws = workspace("pgl2");
  CHECK_FALSE(determinant_check(ws.table(), "2*(Q1+2)", {}).pass);
  CHECK(determinant_check(ws.table(), "-2*(Q1+1)", {}).pass);
  CHECK_FALSE(determinant_check(ws.table(), "6*(Q1+1)", {}).pass);
  CHECK(determinant_check(ws.table(), "6*(Q1+1)", {}, true).pass);
}

TEST_CASE("row permutation flips only the sign") {
  auto& ws = workspace("c2-aff");
  auto words = ws.row_words();
  std::swap(words[0], words[1]);
  RigidTable p = build_rigid_table(ws.algebra(), ws.classes(), words, ws.columns());
  CHECK(p.row_labels[0] == "(T1T2)^2");
  const auto& m = *ws.manifest();
  CHECK(determinant_check(p, m.determinant, m.identify).pass);
}

TEST_CASE("row labels") {
  auto& ws = workspace("c2-aff");
  CHECK(ws.table().row_labels ==
        std::vector<std::string>{"T1T2", "(T1T2)^2", "T0T2", "T0T1", "(T0T1)^2", "T0", "T1", "T2", "1"});
  CHECK(workspace("pgl2").table().row_labels == std::vector<std::string>{"T1", "tau", "1"});
}

TEST_CASE("renderers") {
  const RigidTable& t = workspace("sl2").table();
  std::string md = render_markdown(t, "sl2");
  CHECK(md.rfind("| sl2 | St | pi+ | i_{}(1) |\n|---|---|---|---|\n", 0) == 0);
  std::string csv = render_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  auto j = render_json(t);
  CHECK(j["rows"].size() == 3);
  CHECK(j["cols"].size() == 3);
  CHECK(j["entries"].size() == 3);

  RigidTable e = evaluate_table(t, "Q0=2,Q1=2");
  CHECK(e.q_entries(0, 2) == LaurentPoly(Rational(1)));
  CHECK(e.q_entries(1, 1) == LaurentPoly(Rational(2)));
  CHECK_THROWS(evaluate_table(t, "Q1=2"));
}

TEST_CASE("golden tables") {
  for (const char* name : {"sl2", "pgl2", "c2-aff"}) {
    CAPTURE(name);
    std::string want = slurp(std::string(RIGID_GOLDEN_DIR) + "/" + name + ".md");
    CHECK(render_markdown(workspace(name).table(), name) == want);
  }
}

TEST_CASE("suites") {
  for (const char* name : {"sl2", "pgl2", "c2-aff", "c2-ext"}) {
    CAPTURE(name);
    for (const auto& r : run_suites(workspace(name), "all")) {
      CAPTURE(r.suite);
      CHECK_MESSAGE(r.passed(), r.to_json().dump());
    }
  }
  try {
    run_suite(workspace("sl2"), "nope");
    FAIL("unknown suite accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}
