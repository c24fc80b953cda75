#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>

#include "published_tables.hpp"
#include "rigid/rigidtab.hpp"

using namespace rigid;

namespace {

const std::vector<std::string> kPresets = {"sl2", "pgl2", "c2-aff", "c2-ext"};

std::map<std::string, std::unique_ptr<Workspace>> g_ws;

Workspace& ws(const std::string& name) {
  auto& slot = g_ws[name];
  if (!slot) slot = std::make_unique<Workspace>(preset(name), name);
  return *slot;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const published::Table& table_for(const std::string& name) {
  for (const auto& t : published::tables()) {
    if (t.preset == name) return t;
  }
  fail(ErrorKind::NotFound, "no published table for " + name);
}

Outcome table_criterion(const std::string& name) {
  Outcome o;
  Workspace& w = ws(name);
  std::string first;
  std::size_t bad = published::mismatches(table_for(name), w.table(), &first);
  o.require(bad == 0, std::to_string(bad) + " entries differ, first " + first);
  const auto& m = *w.manifest();
  Check d = determinant_check(w.table(), m.determinant, m.identify);
  o.require(d.pass, "determinant: " + d.detail);
  if (o.pass) o.detail = std::to_string(w.table().rows.size()) + "x" + std::to_string(w.table().col_labels.size()) +
                         " entries match, determinant matches up to sign";
  return o;
}

Outcome suite_criterion(const std::vector<std::string>& presets, const std::vector<std::string>& suites,
                        double per_suite_limit = 0) {
  Outcome o;
  std::size_t checks = 0;
  double slowest = 0;
  for (const auto& p : presets) {
    for (const auto& s : suites) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteReport r = run_suite(ws(p), s);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      slowest = std::max(slowest, secs);
      if (per_suite_limit > 0) o.require(secs < per_suite_limit, p + "/" + s + " took " + std::to_string(secs) + " s");
      for (const auto& c : r.checks) {
        ++checks;
        o.require(c.pass, p + "/" + s + "/" + c.name + ": " + c.detail);
      }
    }
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu checks on %zu presets, slowest suite %.2f s", checks, presets.size(), slowest);
    o.detail = buf;
  }
  return o;
}

Outcome criterion(int n) {
  switch (n) {
    case 1:
      return table_criterion("sl2");
    case 2:
      return table_criterion("pgl2");
    case 3:
      return table_criterion("c2-aff");
    case 4: {
      Outcome o;
      Rational c;
      Check s = specialization_check_extended_c2(ws("c2-aff").table(), &c);
      o.require(s.pass, s.detail);
      const auto& m = *ws("c2-ext").manifest();
      Check e = determinant_check(ws("c2-ext").table(), m.determinant, m.identify, true);
      o.require(e.pass, "extended panel: " + e.detail);
      if (o.pass) o.detail = "constant c = " + to_string(c) + ", extended panel agrees up to a scalar";
      return o;
    }
    case 5: {
      Outcome o;
      const std::map<std::string, std::pair<std::size_t, std::size_t>> want = {
          {"sl2", {3, 2}}, {"pgl2", {3, 2}}, {"c2-aff", {9, 5}}};
      for (const auto& [p, counts] : want) {
        const ClassList& cl = ws(p).classes();
        o.require(cl.size() == counts.first, p + ": " + std::to_string(cl.size()) + " classes");
        o.require(cl.num_elliptic() == counts.second, p + ": " + std::to_string(cl.num_elliptic()) + " elliptic");
      }
      Outcome s = suite_criterion(kPresets, {"classes", "counts"});
      o.require(s.pass, s.detail);
      if (o.pass) o.detail = "3, 3, 9 (5 elliptic), stable; count identity on all presets";
      return o;
    }
    case 6:
      return suite_criterion(kPresets, {"twist"});
    case 7:
      return suite_criterion(kPresets, {"pairing"});
    case 8:
      return suite_criterion(kPresets, {"density"});
    case 9:
      return suite_criterion(kPresets, {"relations", "lengths", "mackey", "adjunction"}, 120);
  }
  return {false, "unknown criterion"};
}

const double kLimit[] = {0, 5, 5, 600, 0, 0, 0, 0, 0, 0};

}  // namespace

int main() {
  bool all = true;
  for (int n = 1; n <= 9; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criterion(n);
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (kLimit[n] > 0 && secs >= kLimit[n]) o.require(false, "runtime over limit");
    all = all && o.pass;
    std::printf("criterion %d: %s (%.2f s) %s\n", n, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return all ? 0 : 1;
}
