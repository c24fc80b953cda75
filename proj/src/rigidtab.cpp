#include "rigid/rigidtab.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

namespace rigid {

namespace {

ColumnSpec onedim(std::string name, std::map<std::string, std::string> signature) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = "onedim";
  c.signature = std::move(signature);
  return c;
}

ColumnSpec induced(std::string name, Subset J, std::map<std::string, std::string> signature = {}) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = "induced";
  c.J = J;
  c.signature = std::move(signature);
  return c;
}

ColumnSpec lift(std::string name) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = "lift";
  return c;
}

PresetManifest sl2_manifest() {
  PresetManifest m;
  m.preset = "sl2";
  m.title = "SL(2)";
  m.row_words = {"s0", "s1", ""};
  m.cols = {onedim("St", {{"T0", "-1"}, {"T1", "-1"}}),
            onedim("pi+", {{"T0", "-1"}, {"T1", "Q1"}}),
            induced("i_{}(1)", 0)};
  m.determinant = "-(Q1+1)^2";
  m.identify = {{"Q0", "Q1"}};
  m.classes = 3;
  m.elliptic = 2;
  return m;
}

PresetManifest pgl2_manifest() {
  PresetManifest m;
  m.preset = "pgl2";
  m.title = "PGL(2)";
  m.row_words = {"s1", "tau", ""};
  m.cols = {onedim("St-", {{"T1", "-1"}, {"tau", "1"}}),
            onedim("St+", {{"T1", "-1"}, {"tau", "-1"}}),
            induced("i_{}(1)", 0)};
  m.determinant = "2*(Q1+1)";
  m.classes = 3;
  m.elliptic = 2;
  return m;
}

PresetManifest c2_manifest() {
  PresetManifest m;
  m.preset = "c2-aff";
  m.title = "C2-aff";
  m.row_words = {"s1,s2", "s1,s2,s1,s2", "s0,s2", "s0,s1", "s0,s1,s0,s1", "s0", "s1", "s2", ""};
  for (const char* irrep : {"2x0", "11x0", "0x2", "0x11", "1x1"}) m.cols.push_back(lift(irrep));
  m.cols.push_back(induced("i_{1}(St)", 1U << 0, {{"T1", "-1"}, {"tau", "1"}}));
  m.cols.push_back(induced("i_{2}(St)", 1U << 1, {{"T0", "-1"}, {"T1", "-1"}}));
  m.cols.push_back(induced("i_{2}(pi+)", 1U << 1, {{"T0", "-1"}, {"T1", "Q2"}}));
  m.cols.push_back(induced("i_{}(1)", 0));
  m.determinant = "-(1+Q0)^3*(1+Q1)^3*(1+Q2)^3*(Q0+Q1)*(Q1+Q2)*(1+Q0*Q1)*(1+Q1*Q2)";
  m.classes = 9;
  m.elliptic = 5;
  return m;
}

PresetManifest c2_ext_manifest() {
  PresetManifest m;
  m.preset = "c2-ext";
  m.title = "C2-ext";
  for (const char* irrep : {"2x0", "11x0", "0x2", "0x11", "1x1"}) {
    ColumnSpec c = lift(irrep);
    c.lift_copies = {{2, 0}};
    c.lift_omega = "-1";
    m.cols.push_back(c);
  }
  m.cols.push_back(induced("i_{1}(St-)", 1U << 0, {{"T0", "-1"}, {"T1", "-1"}, {"tau", "1"}}));
  m.cols.push_back(induced("i_{2}(St-)", 1U << 1, {{"T0", "-1"}, {"T1", "-1"}, {"tau", "1"}}));
  m.cols.push_back(induced("i_{2}(St+)", 1U << 1, {{"T0", "-1"}, {"T1", "-1"}, {"tau", "-1"}}));
  m.cols.push_back(induced("i_{}(1)", 0));
  m.determinant = "(1+Q1)^5*(1+Q2)^3*(Q1+Q2)*(1+Q1*Q2)";
  m.determinant_up_to_scalar = true;
  m.classes = 9;
  m.elliptic = 5;
  return m;
}

std::string q_string(const LaurentPoly& p) { return to_compact_string(render_in_q(p)); }

bool matches(const ModuleInfo& info, const std::map<std::string, std::string>& sig) {
  for (const auto& [k, v] : sig) {
    auto it = info.signature.find(k);
    if (it == info.signature.end() || q_string(it->second) != v) return false;
  }
  return true;
}

ModulePtr select(const std::vector<ModulePtr>& ms, const std::map<std::string, std::string>& sig,
                 const std::string& what) {
  for (const auto& M : ms) {
    if (matches(M->info(), sig)) return M;
  }
  fail(ErrorKind::NotFound, "no module with the signature of " + what);
}

std::vector<Substitution> param_point(const VarTablePtr& qt, const std::vector<long>& values) {
  std::vector<Substitution> out;
  std::size_t n = 0;
  for (std::size_t i = 0; i < qt->size(); ++i) {
    if ((*qt)[i].kind != VarKind::Param) continue;
    out.push_back({i, LaurentPoly::constant(Rational(values[n++ % values.size()]), qt)});
  }
  return out;
}

std::string point_name(const VarTablePtr& qt, const std::vector<Substitution>& a) {
  std::string s;
  for (const auto& sub : a) s += (s.empty() ? "" : ",") + (*qt)[sub.var].name + "=" + to_string(sub.value);
  return s;
}

std::vector<std::vector<Rational>> numeric(const PolyMatrix& m, const std::vector<Substitution>& a) {
  PolyMatrix e = evaluate(m, a);
  std::vector<std::vector<Rational>> out(e.rows(), std::vector<Rational>(e.cols()));
  for (std::size_t r = 0; r < e.rows(); ++r) {
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (!e(r, c).is_constant()) fail(ErrorKind::InvalidArgument, "entry is not numeric: " + to_string(e(r, c)));
      out[r][c] = e(r, c).constant_value();
    }
  }
  return out;
}

PolyMatrix render_matrix_in_q(const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = render_in_q(m(r, c));
  }
  return out;
}

VarTablePtr q_table(const HeckeAlgebra& H) { return H.vars()->q_table(); }

LaurentPoly q_variable(const VarTablePtr& qt, const std::string& name) {
  auto i = qt->find(name);
  if (!i) fail(ErrorKind::NotFound, "unknown parameter " + name);
  return LaurentPoly::variable(qt, *i);
}

}  // namespace

std::optional<PresetManifest> preset_manifest(std::string_view name) {
  if (name == "sl2") return sl2_manifest();
  if (name == "pgl2") return pgl2_manifest();
  if (name == "c2-aff") return c2_manifest();
  if (name == "c2-ext") return c2_ext_manifest();
  return std::nullopt;
}

// ------------------------------------------------------------------ columns

ModulePtr build_column(const HeckeAlgebraPtr& H, const ColumnSpec& c, TwistMode mode) {
  const AffineWeyl& aw = H->weyl();
  if (c.kind == "onedim") return select(one_dim_modules(H, aw.all(), false), c.signature, c.name);
  if (c.kind == "lift") {
    const auto [a, b] = c.lift_simples;
    for (const auto& f : finite_c2_irreps(H->Q(a), H->Q(b))) {
      if (f.name != c.name) continue;
      std::map<int, PolyMatrix> finite = {{a, f.Ta}, {b, f.Tb}};
      for (const auto& [to, from] : c.lift_copies) finite[to] = finite.at(from);
      std::map<int, LaurentPoly> scalars;
      const LaurentPoly value = parse_poly(c.lift_scalar, H->vars());
      for (std::size_t s = 0; s < aw.num_simples(); ++s) {
        if (!finite.count(static_cast<int>(s))) scalars[static_cast<int>(s)] = value;
      }
      std::vector<LaurentPoly> omega;
      if (!c.lift_omega.empty()) omega.push_back(parse_poly(c.lift_omega, H->vars()));
      return lift_from_parahoric(H, finite, scalars, f.name, omega);
    }
    fail(ErrorKind::NotFound, "unknown finite irrep " + c.name);
  }
  if (c.kind == "induced") {
    if (c.J == 0) {
      auto ms = one_dim_modules(H, 0, mode == TwistMode::Symbolic);
      return induce(*ms.at(0), aw.all());
    }
    QuotientAlgebra qa = quotient_algebra(H, c.J);
    ModulePtr sigma = select(one_dim_modules(qa.H, qa.H->weyl().all(), false), c.signature, c.name);
    std::vector<LaurentPoly> twist;
    if (mode == TwistMode::Symbolic) twist = symbolic_twist(*H, c.J);
    return induce(*inflate(H, c.J, qa, *sigma, twist), aw.all());
  }
  fail(ErrorKind::InvalidArgument, "unknown column kind " + c.kind);
}

ModulePtr evaluate_module(const FinDimModule& M, const std::vector<Substitution>& assignment) {
  ModuleData d = M.data();
  for (auto& [s, m] : d.T) m = evaluate(m, assignment);
  for (auto* list : {&d.omega, &d.theta, &d.theta_inv}) {
    for (auto& m : *list) m = evaluate(m, assignment);
  }
  for (auto& [k, v] : d.info.signature) v = evaluate(v, assignment);
  d.info.twist = "numeric";
  return certified(M.algebra_ptr(), std::move(d));
}

std::vector<ColumnSpec> default_columns(const HeckeAlgebraPtr& H) {
  std::vector<ColumnSpec> out;
  for (const auto& M : one_dim_modules(H, H->weyl().all(), false)) {
    ColumnSpec c;
    c.kind = "onedim";
    for (const auto& [k, v] : M->info().signature) {
      c.signature[k] = q_string(v);
      c.name += (c.name.empty() ? "" : ",") + k + "=" + c.signature[k];
    }
    c.name = "(" + c.name + ")";
    out.push_back(c);
  }
  out.push_back(induced("i_{}(1)", 0));
  return out;
}

// ------------------------------------------------------------------- tables

std::string row_label(const AffineWeyl& aw, const std::string& class_label) {
  if (class_label == "1") return "1";
  std::vector<std::string> names, tokens;
  for (const auto& s : aw.simples()) names.push_back(s.name);
  for (std::size_t o = 1; o < aw.omega_names().size(); ++o) names.push_back(aw.omega_names()[o]);
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (std::size_t pos = 0; pos < class_label.size();) {
    auto it = std::find_if(names.begin(), names.end(),
                           [&](const std::string& n) { return class_label.compare(pos, n.size(), n) == 0; });
    if (it == names.end()) fail(ErrorKind::Parse, "cannot split class label " + class_label);
    tokens.push_back(*it);
    pos += it->size();
  }
  auto show = [&](std::size_t n) {
    std::string r;
    for (std::size_t i = 0; i < n; ++i) r += tokens[i][0] == 's' ? "T" + tokens[i].substr(1) : tokens[i];
    return r;
  };
  for (std::size_t p = 1; p < tokens.size(); ++p) {
    if (tokens.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < tokens.size() && periodic; ++i) periodic = tokens[i] == tokens[i - p];
    if (periodic) {
      std::string base = show(p);
      return (p > 1 ? "(" + base + ")" : base) + "^" + std::to_string(tokens.size() / p);
    }
  }
  return show(tokens.size());
}

RigidTable build_rigid_table(const HeckeAlgebraPtr& H, const ClassList& classes,
                             const std::vector<std::string>& row_words, const std::vector<ColumnSpec>& cols,
                             TwistMode mode, int jobs) {
  const AffineWeyl& aw = H->weyl();
  RigidTable t;
  if (row_words.empty()) {
    t.rows = classes.records();
  } else {
    for (const auto& w : row_words) {
      const ExtAffElt e = w.empty() ? aw.identity() : aw.parse_word(w);
      t.rows.push_back(classes[static_cast<std::size_t>(classify(aw, e, classes))]);
    }
  }
  std::vector<HeckeElt> elements;
  for (const auto& r : t.rows) {
    t.row_labels.push_back(row_label(aw, r.label));
    elements.push_back(class_element(*H, r));
  }
  for (const auto& c : cols) t.col_labels.push_back(c.name);
  t.modules.resize(cols.size());
  t.entries = PolyMatrix(t.rows.size(), cols.size());
  auto cell_column = [&](std::size_t j) {
    t.modules[j] = build_column(H, cols[j], mode);
    for (std::size_t i = 0; i < elements.size(); ++i) t.entries(i, j) = t.modules[j]->trace(elements[i]);
  };
  const std::size_t batch = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < cols.size(); start += batch) {
    if (batch == 1) {
      cell_column(start);
      continue;
    }
    std::vector<std::future<void>> running;
    for (std::size_t j = start; j < std::min(cols.size(), start + batch); ++j) {
      running.push_back(std::async(std::launch::async, cell_column, j));
    }
    for (auto& f : running) f.get();
  }
  t.q_entries = render_matrix_in_q(t.entries);
  return t;
}

std::string render_markdown(const RigidTable& t, const std::string& corner) {
  std::ostringstream os;
  os << "| " << corner;
  for (const auto& c : t.col_labels) os << " | " << c;
  os << " |\n|";
  for (std::size_t j = 0; j <= t.col_labels.size(); ++j) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
    os << "| " << t.row_labels[i];
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) os << " | " << to_compact_string(t.q_entries(i, j));
    os << " |\n";
  }
  return os.str();
}

std::string render_csv(const RigidTable& t) {
  auto quote = [](const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  };
  std::ostringstream os;
  os << "class";
  for (const auto& c : t.col_labels) os << "," << quote(c);
  os << "\n";
  for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
    os << quote(t.row_labels[i]);
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) os << "," << quote(to_string(t.q_entries(i, j)));
    os << "\n";
  }
  return os.str();
}

nlohmann::json render_json(const RigidTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) row.push_back(to_string(t.q_entries(i, j)));
    entries.push_back(row);
  }
  return {{"rows", t.row_labels}, {"cols", t.col_labels}, {"entries", entries}};
}

RigidTable evaluate_table(const RigidTable& t, const std::string& spec) {
  RigidTable out = t;
  if (t.q_entries.rows() == 0) return out;
  const VarTablePtr qt = t.modules.at(0)->algebra().vars()->q_table();
  // a bare "q" stands for every parameter when no variable carries that name
  std::string expanded;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq != std::string::npos && item.substr(0, eq) == "q" && qt && !qt->find("q")) {
      for (const auto& e : qt->entries()) expanded += e.name + item.substr(eq) + ",";
    } else {
      expanded += item + ",";
    }
  }
  auto a = parse_assignment(expanded, qt);
  auto values = numeric(t.q_entries, a);
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t c = 0; c < values[r].size(); ++c) out.q_entries(r, c) = LaurentPoly(values[r][c]);
  }
  return out;
}

// ------------------------------------------------------------- determinants

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return {{"suite", suite}, {"checks", cs}};
}

Check determinant_check(const RigidTable& t, const std::string& expected,
                        const std::map<std::string, std::string>& identify, bool up_to_scalar) {
  Check c{"determinant", false, ""};
  if (t.q_entries.rows() != t.q_entries.cols()) {
    c.detail = "table is not square";
    return c;
  }
  const VarTablePtr qt = t.q_entries(0, 0).vars();
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < qt->size(); ++i) {
    auto it = identify.find((*qt)[i].name);
    images.push_back(it == identify.end() ? LaurentPoly::variable(qt, i) : q_variable(qt, it->second));
  }
  const LaurentPoly det = substitute(det_bareiss(t.q_entries), images, qt);
  const LaurentPoly want = parse_poly(expected, qt);
  if (up_to_scalar) {
    auto quotient = det.try_divide(want);
    c.pass = quotient && quotient->is_constant() && !quotient->is_zero();
    c.detail = c.pass ? "det = " + to_string(quotient->constant_value()) + " * (" + expected + ")"
                      : "det = " + to_compact_string(det) + " is not a constant multiple of " + expected;
  } else if (det == want) {
    c.pass = true;
    c.detail = "det = " + to_compact_string(det);
  } else if (det == -want) {
    c.pass = true;
    c.detail = "det = " + to_compact_string(det) + " (expected up to sign: " + expected + ")";
  } else {
    c.detail = "det = " + to_compact_string(det) + ", expected " + expected;
  }
  return c;
}

Check specialization_check_extended_c2(const RigidTable& c2_table, Rational* constant) {
  Check c{"extended C2 specialization", false, ""};
  const VarTablePtr qt = c2_table.q_entries(0, 0).vars();
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < qt->size(); ++i) images.push_back(LaurentPoly::variable(qt, i));
  images[*qt->find("Q0")] = LaurentPoly::constant(1, qt);
  images[*qt->find("Q1")] = q_variable(qt, "Q2");
  images[*qt->find("Q2")] = q_variable(qt, "Q1");
  const LaurentPoly det = substitute(det_bareiss(c2_table.q_entries), images, qt);
  const LaurentPoly target = parse_poly("(1+Q1)^3*(1+Q2)^5*(Q1+Q2)*(1+Q1*Q2)", qt);
  auto quotient = det.try_divide(target);
  if (quotient && quotient->is_constant() && !quotient->is_zero()) {
    c.pass = true;
    c.detail = "c = " + to_string(quotient->constant_value());
    if (constant) *constant = quotient->constant_value();
  } else {
    c.detail = "specialized det = " + to_compact_string(det) + " is not a constant multiple of " + to_compact_string(target);
  }
  return c;
}

// ---------------------------------------------------------------- workspace

Workspace::Workspace(BasedRootDatum datum, std::string name, int max_length, int jobs)
    : name_(std::move(name)), jobs_(jobs) {
  aw_ = std::make_shared<AffineWeyl>(std::move(datum));
  H_ = HeckeAlgebra::make(aw_);
  classes_ = newton_zero_classes(*aw_, max_length);
  manifest_ = preset_manifest(name_);
}

std::vector<std::string> Workspace::row_words() const { return manifest_ ? manifest_->row_words : std::vector<std::string>{}; }

std::vector<ColumnSpec> Workspace::columns() const { return manifest_ ? manifest_->cols : default_columns(H_); }

const RigidTable& Workspace::table() {
  if (!table_) table_ = build_rigid_table(H_, classes_, row_words(), columns(), TwistMode::Trivial, jobs_);
  return *table_;
}

const RigidTable& Workspace::symbolic_table() {
  if (!symbolic_) symbolic_ = build_rigid_table(H_, classes_, row_words(), columns(), TwistMode::Symbolic, jobs_);
  return *symbolic_;
}

// ------------------------------------------------------------------- suites

namespace {

Check make_check(std::string name, bool pass, std::string detail) { return {std::move(name), pass, std::move(detail)}; }

IntVec unit_vec(std::size_t m, std::size_t k, std::int64_t s = 1) {
  IntVec e(m, 0);
  e[k] = s;
  return e;
}

SuiteReport suite_relations(Workspace& ws) {
  SuiteReport r{"relations", {}};
  const HeckeAlgebra& H = *ws.algebra();
  const AffineWeyl& aw = ws.weyl();
  std::string bad;
  for (std::size_t s = 0; s < aw.num_simples() && bad.empty(); ++s) {
    const int si = static_cast<int>(s);
    HeckeElt Ts = H.T(aw.simple(si));
    if (H.mul(Ts, Ts) != (H.Q(si) - 1) * Ts + H.Q(si) * H.one()) bad = "quadratic " + aw.simples()[s].name;
    for (std::size_t t = s + 1; t < aw.num_simples(); ++t) {
      const int m = aw.coxeter(si, static_cast<int>(t));
      if (m == 0) continue;
      HeckeElt a = H.one(), b = H.one();
      for (int k = 0; k < m; ++k) {
        a = H.mul_simple_right(a, k % 2 == 0 ? si : static_cast<int>(t));
        b = H.mul_simple_right(b, k % 2 == 0 ? static_cast<int>(t) : si);
      }
      if (a != b) bad = "braid " + aw.simples()[s].name + "," + aw.simples()[t].name;
    }
  }
  r.checks.push_back(make_check("quadratic and braid", bad.empty(), bad.empty() ? "all simple pairs" : bad));

  const auto ball = aw.ball(3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  bad.clear();
  for (int trial = 0; trial < 12 && bad.empty(); ++trial) {
    HeckeElt a = H.T(ball[pick(rng)]), b = H.T(ball[pick(rng)]), c = H.T(ball[pick(rng)]);
    if (H.mul(H.mul(a, b), c) != H.mul(a, H.mul(b, c))) bad = "associativity failed";
  }
  r.checks.push_back(make_check("associativity", bad.empty(), bad.empty() ? "12 random triples in the radius-3 ball" : bad));
  bad.clear();
  for (const auto& e : ball) {
    if (H.to_im(H.to_bernstein(H.T(e))) != H.T(e)) {
      bad = "round trip fails at " + aw.render(e);
      break;
    }
  }
  r.checks.push_back(make_check("Bernstein round trip", bad.empty(),
                                bad.empty() ? std::to_string(ball.size()) + " elements of the radius-3 ball" : bad));
  bad.clear();
  try {
    for (const auto& M : ws.table().modules) verify_relations(*M);
  } catch (const Error& e) {
    bad = e.what();
  }
  r.checks.push_back(make_check("table modules", bad.empty(),
                                bad.empty() ? std::to_string(ws.table().modules.size()) + " modules certified" : bad));
  return r;
}

SuiteReport suite_lengths(Workspace& ws) {
  SuiteReport r{"lengths", {}};
  const AffineWeyl& aw = ws.weyl();
  const auto bfs = aw.bfs_lengths(8);
  std::string bad;
  for (const auto& [e, d] : bfs) {
    if (aw.length(e) != d) {
      bad = aw.render(e) + ": length " + std::to_string(aw.length(e)) + " vs bfs " + std::to_string(d);
      break;
    }
  }
  r.checks.push_back(make_check("length vs BFS (radius 8)", bad.empty(),
                                bad.empty() ? std::to_string(bfs.size()) + " elements agree" : bad));
  return r;
}

SuiteReport suite_classes(Workspace& ws) {
  SuiteReport r{"classes", {}};
  const auto& cl = ws.classes();
  std::string labels;
  for (const auto& rec : cl.records()) labels += (labels.empty() ? "" : " ") + rec.label + (rec.elliptic ? "*" : "");
  const auto& man = ws.manifest();
  if (man) {
    r.checks.push_back(make_check("class count", cl.size() == man->classes,
                                  std::to_string(cl.size()) + " classes (expected " + std::to_string(man->classes) + "): " + labels));
    r.checks.push_back(make_check("elliptic count", cl.num_elliptic() == man->elliptic,
                                  std::to_string(cl.num_elliptic()) + " elliptic (expected " + std::to_string(man->elliptic) + ")"));
  } else {
    r.checks.push_back(make_check("class count", cl.size() > 0, std::to_string(cl.size()) + " classes: " + labels));
  }
  bool stable = true;
  std::string detail = "unchanged at bound 10";
  try {
    ClassList wider = newton_zero_classes(ws.weyl(), 10, true);
    stable = wider.size() == cl.size();
    if (!stable) detail = std::to_string(wider.size()) + " classes at bound 10";
  } catch (const Error& e) {
    stable = false;
    detail = e.what();
  }
  r.checks.push_back(make_check("stability", stable, detail));
  std::string bad;
  for (const auto& rec : cl.records()) {
    Descent d = descend_to_minimal(ws.weyl(), rec.rep);
    if (d.min_length != rec.min_length) bad = rec.label + " is not of minimal length";
  }
  r.checks.push_back(make_check("minimal representatives", bad.empty(), bad.empty() ? "all representatives minimal" : bad));
  return r;
}

SuiteReport suite_counts(Workspace& ws) {
  SuiteReport r{"counts", {}};
  CountIdentityReport rep = count_identity_check(ws.weyl(), ws.classes());
  std::string terms;
  for (const auto& t : rep.terms) terms += (terms.empty() ? "" : " + ") + std::to_string(t.elliptic_classes);
  r.checks.push_back(make_check("class-count identity", rep.holds,
                                terms + " = " + std::to_string(rep.total) + " vs " + std::to_string(rep.class_count) +
                                    " classes (quotient reading: " + std::to_string(rep.quotient_total) + ")"));
  return r;
}

std::vector<BernElt> probes(const HeckeAlgebra& H, Subset K) {
  const AffineWeyl& aw = H.weyl();
  const std::size_t m = aw.m();
  std::vector<IntVec> xs = {IntVec(m, 0)};
  for (std::size_t k = 0; k < m; ++k) {
    xs.push_back(unit_vec(m, k));
    xs.push_back(unit_vec(m, k, -1));
  }
  xs.push_back(IntVec(m, 1));
  std::vector<BernElt> out;
  for (int w : aw.W().parabolic_elements(K)) {
    for (const auto& x : xs) out.push_back(H.bern_mul(H.theta(x), H.bern_T_finite(w)));
  }
  return out;
}

SuiteReport suite_mackey(Workspace& ws) {
  SuiteReport r{"mackey", {}};
  const HeckeAlgebraPtr& H = ws.algebra();
  const AffineWeyl& aw = ws.weyl();
  const auto& W = aw.W();
  const Subset all = aw.all();
  std::size_t pairs = 0;
  std::string bad;
  for (Subset J = 0; J <= all && bad.empty(); ++J) {
    ModulePtr sigma = one_dim_modules(H, J, true).at(0);
    ModulePtr induced = induce(*sigma, all);
    for (Subset K = 0; K <= all && bad.empty(); ++K) {
      ModulePtr lhs = restrict_to(*induced, K);
      std::vector<ModulePtr> rhs;
      for (int w : W.double_coset_reps(K, J)) {
        auto [Jw, Kw] = W.double_coset_subsets(w, K, J);
        (void)Kw;
        rhs.push_back(induce(*twist_by(*restrict_to(*sigma, Jw), w), K));
      }
      for (const auto& h : probes(*H, K)) {
        LaurentPoly sum;
        for (const auto& M : rhs) sum += M->trace(h);
        if (lhs->trace(h) != sum) {
          bad = "K=" + subset_name(K) + " J=" + subset_name(J) + " at " + render(h, aw);
          break;
        }
      }
      ++pairs;
    }
  }
  r.checks.push_back(make_check("Mackey formula", bad.empty(),
                                bad.empty() ? std::to_string(pairs) + " (K,J) pairs with symbolic twists" : bad));
  return r;
}

SuiteReport suite_adjunction(Workspace& ws) {
  SuiteReport r{"adjunction", {}};
  const HeckeAlgebraPtr& H = ws.algebra();
  const AffineWeyl& aw = ws.weyl();
  const auto ball = aw.ball(4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<BernElt> hs;
  for (int i = 0; i < 4; ++i) {
    HeckeElt h;
    for (int k = 0; k < 3; ++k) add_term(h, ball[pick(rng)], LaurentPoly(coeff(rng) == 0 ? 1 : coeff(rng)));
    hs.push_back(H->to_bernstein(h));
  }
  std::string bad;
  std::size_t count = 0;
  for (Subset J = 0; J < aw.all() && bad.empty(); ++J) {
    for (const auto& sigma : one_dim_modules(H, J, true)) {
      ModulePtr I = induce(*sigma, aw.all());
      for (const auto& h : hs) {
        if (I->trace(h) != sigma->trace(H->bar_restrict(h, J))) {
          bad = "J=" + subset_name(J) + " at " + render(h, aw);
          break;
        }
        ++count;
      }
    }
  }
  r.checks.push_back(make_check("trace adjunction", bad.empty(),
                                bad.empty() ? std::to_string(count) + " (module, h) pairs, h of length <= 4" : bad));

  bad.clear();
  count = 0;
  const auto& t = ws.table();
  const auto cols = ws.columns();
  for (std::size_t j = 0; j < cols.size() && bad.empty(); ++j) {
    if (cols[j].kind != "induced") continue;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      BernElt h = H->to_bernstein(class_element(*H, t.rows[i]));
      if (!a_trace(*t.modules[j], h).is_zero()) {
        bad = cols[j].name + " at " + t.row_labels[i];
        break;
      }
      ++count;
    }
  }
  r.checks.push_back(make_check("A kills induced modules", bad.empty(),
                                bad.empty() ? std::to_string(count) + " traces of A applied to induced columns vanish" : bad));
  return r;
}

SuiteReport suite_twist(Workspace& ws) {
  SuiteReport r{"twist", {}};
  const auto& plain = ws.table();
  const auto& sym = ws.symbolic_table();
  std::string bad;
  for (std::size_t i = 0; i < sym.q_entries.rows() && bad.empty(); ++i) {
    for (std::size_t j = 0; j < sym.q_entries.cols(); ++j) {
      if (sym.q_entries(i, j).involves_kind(VarKind::Twist) || sym.q_entries(i, j) != plain.q_entries(i, j)) {
        bad = sym.row_labels[i] + ", " + sym.col_labels[j] + ": " + to_compact_string(sym.q_entries(i, j));
        break;
      }
    }
  }
  r.checks.push_back(make_check("rigid entries twist-free", bad.empty(),
                                bad.empty() ? "all entries independent of the symbolic twist" : bad));
  const AffineWeyl& aw = ws.weyl();
  const HeckeAlgebra& H = *ws.algebra();
  ExtAffElt t = aw.translation(unit_vec(aw.m(), 0));
  bool dependent = false;
  std::string detail = "no column depends on the twist at " + aw.render(t);
  for (std::size_t j = 0; j < sym.modules.size() && !dependent; ++j) {
    LaurentPoly v = sym.modules[j]->trace(H.T(t));
    if (v.involves_kind(VarKind::Twist)) {
      dependent = true;
      detail = sym.col_labels[j] + " at " + aw.render(t) + ": " + to_compact_string(v);
    }
  }
  r.checks.push_back(make_check("negative control (nonzero Newton point)", dependent, detail));
  return r;
}

std::vector<std::vector<Substitution>> admissible_points(const VarTablePtr& qt) {
  std::vector<std::vector<Substitution>> out = {param_point(qt, {2}), param_point(qt, {3}), param_point(qt, {5})};
  auto mixed = param_point(qt, {2, 3, 5});
  if (mixed.size() > 1) out.push_back(mixed);
  return out;
}

SuiteReport suite_pairing(Workspace& ws) {
  SuiteReport r{"pairing", {}};
  const auto& t = ws.table();
  const HeckeAlgebraPtr& H = ws.algebra();
  const VarTablePtr qt = q_table(*H);
  const bool square = t.q_entries.rows() == t.q_entries.cols();
  const auto& man = ws.manifest();
  if (man && !man->determinant.empty()) r.checks.push_back(determinant_check(t, man->determinant, man->identify, man->determinant_up_to_scalar));
  if (ws.name() == "c2-aff") r.checks.push_back(specialization_check_extended_c2(t));
  if (square) {
    const LaurentPoly det = det_bareiss(t.q_entries);
    r.checks.push_back(make_check("determinant nonzero", !det.is_zero(), "det = " + to_compact_string(det)));
    for (const auto& p : admissible_points(qt)) {
      Rational d = det_rational(numeric(t.q_entries, p));
      r.checks.push_back(make_check("nonsingular at " + point_name(qt, p), d != 0, "det = " + to_string(d)));
    }
    Rational d = det_rational(numeric(t.q_entries, param_point(qt, {-1})));
    r.checks.push_back(make_check("behavior at q=-1 (recorded)", true, d == 0 ? "singular" : "regular, det = " + to_string(d)));
  } else {
    r.checks.push_back(make_check("square panel", true,
                                  "not applicable: " + std::to_string(t.q_entries.rows()) + " classes, " +
                                      std::to_string(t.q_entries.cols()) + " columns"));
  }

  std::vector<std::size_t> elliptic_rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i].elliptic) elliptic_rows.push_back(i);
  }
  PolyMatrix block(elliptic_rows.size(), t.modules.size());
  for (std::size_t a = 0; a < elliptic_rows.size(); ++a) {
    BernElt h = a_adjoint(*H, H->to_bernstein(class_element(*H, t.rows[elliptic_rows[a]])));
    for (std::size_t j = 0; j < t.modules.size(); ++j) block(a, j) = render_in_q(t.modules[j]->trace(h));
  }
  for (const auto& p : admissible_points(qt)) {
    std::size_t rank = rank_rational(numeric(block, p));
    r.checks.push_back(make_check("elliptic rank after A at " + point_name(qt, p), rank == elliptic_rows.size(),
                                  "rank " + std::to_string(rank) + " of " + std::to_string(elliptic_rows.size()) +
                                      " elliptic classes"));
  }
  return r;
}

SuiteReport suite_density(Workspace& ws) {
  SuiteReport r{"density", {}};
  const HeckeAlgebraPtr& H = ws.algebra();
  const AffineWeyl& aw = ws.weyl();
  const auto& t = ws.table();
  const VarTablePtr& vars = H->vars();
  std::vector<ModulePtr> panel = t.modules;
  std::vector<ColumnSpec> induced;
  for (const auto& c : ws.columns()) {
    if (c.kind == "induced") induced.push_back(c);
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  for (int extra = 0; extra < 5 && !induced.empty(); ++extra) {
    ModulePtr M = build_column(H, induced[static_cast<std::size_t>(extra) % induced.size()], TwistMode::Symbolic);
    std::vector<Substitution> a;
    for (std::size_t i = 0; i < vars->size(); ++i) {
      if ((*vars)[i].kind == VarKind::Twist) {
        a.push_back({i, LaurentPoly::constant(Rational(num(rng)) / Rational(den(rng)), vars)});
      }
    }
    panel.push_back(evaluate_module(*M, a));
  }
  const auto& cl = ws.classes();
  std::vector<HeckeElt> TO;
  for (const auto& rec : cl.records()) TO.push_back(class_element(*H, rec));
  PolyMatrix m(TO.size(), panel.size());
  for (std::size_t i = 0; i < TO.size(); ++i) {
    for (std::size_t j = 0; j < panel.size(); ++j) m(i, j) = render_in_q(panel[j]->trace(TO[i]));
  }
  const VarTablePtr qt = q_table(*H);
  std::size_t rank = rank_rational(numeric(m, param_point(qt, {2})));
  r.checks.push_back(make_check("T_O independent on the extended panel at q=2", rank == TO.size(),
                                "rank " + std::to_string(rank) + " of " + std::to_string(TO.size()) + " classes, " +
                                    std::to_string(panel.size()) + " modules"));

  CocenterReducer reducer(*H, cl, true);
  const auto ball = aw.ball(6);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::string bad;
  for (int trial = 0; trial < 20 && bad.empty(); ++trial) {
    const ExtAffElt e = ball[pick(rng)];
    CocenterCombination comb = reducer.reduce(e);
    for (const auto& M : panel) {
      LaurentPoly rhs;
      for (const auto& [label, c] : comb.coeffs) rhs += c * M->trace(H->T(comb.reps.at(label)));
      if (M->trace(H->T(e)) != rhs) {
        bad = aw.render(e) + " -> " + render(comb, aw);
        break;
      }
    }
  }
  r.checks.push_back(make_check("cocenter reduction preserves traces", bad.empty(),
                                bad.empty() ? "20 random elements of length <= 6" : bad));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "lengths", "classes", "mackey", "adjunction",
                                                 "twist",     "pairing", "density", "counts"};
  return names;
}

SuiteReport run_suite(Workspace& ws, const std::string& suite) {
  if (suite == "relations") return suite_relations(ws);
  if (suite == "lengths") return suite_lengths(ws);
  if (suite == "classes") return suite_classes(ws);
  if (suite == "mackey") return suite_mackey(ws);
  if (suite == "adjunction") return suite_adjunction(ws);
  if (suite == "twist") return suite_twist(ws);
  if (suite == "pairing") return suite_pairing(ws);
  if (suite == "density") return suite_density(ws);
  if (suite == "counts") return suite_counts(ws);
  fail(ErrorKind::InvalidArgument, "unknown suite " + suite);
}

std::vector<SuiteReport> run_suites(Workspace& ws, const std::string& suite) {
  if (suite != "all") return {run_suite(ws, suite)};
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(ws, s));
  return out;
}

}  // namespace rigid
