#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rigid/rigidtab.hpp"

using namespace rigid;

namespace {

struct Config {
  std::string preset = "sl2";
  std::string datum;
  std::string format = "md";
  int max_length = 8;
  std::string spec;
  std::string suite = "all";
  std::string word;
  int jobs = 1;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Workspace open_workspace(const Config& cfg) {
  if (!cfg.datum.empty()) {
    BasedRootDatum d = load_datum_file(cfg.datum);
    std::string name = d.name.empty() ? std::filesystem::path(cfg.datum).stem().string() : d.name;
    // preset names select a hand-picked panel; file data always get the default one
    const auto presets = preset_names();
    if (std::find(presets.begin(), presets.end(), name) != presets.end()) name += "-datum";
    return Workspace(std::move(d), name, cfg.max_length, cfg.jobs);
  }
  return Workspace(preset(cfg.preset), cfg.preset, cfg.max_length, cfg.jobs);
}

std::string newton_string(const RatVec& nu) {
  std::string s = "(";
  for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + to_string(nu[i]);
  return s + ")";
}

std::string cmd_classes(const Config& cfg, int& code) {
  Workspace ws = open_workspace(cfg);
  const AffineWeyl& aw = ws.weyl();
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : ws.classes().records()) {
      nlohmann::json nu = nlohmann::json::array();
      for (const auto& x : r.newton.nu) nu.push_back(to_string(x));
      j.push_back({{"rep", aw.render(r.rep)},
                   {"min_length", r.min_length},
                   {"newton", nu},
                   {"elliptic", r.elliptic},
                   {"label", r.label}});
    }
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "rep,label,min_length,newton,elliptic\n";
    for (const auto& r : ws.classes().records()) {
      os << aw.render(r.rep) << "," << r.label << "," << r.min_length << ",\"" << newton_string(r.newton.nu) << "\","
         << (r.elliptic ? "true" : "false") << "\n";
    }
  } else {
    os << "| rep | label | min_length | newton | elliptic |\n|---|---|---|---|---|\n";
    for (const auto& r : ws.classes().records()) {
      os << "| " << aw.render(r.rep) << " | " << r.label << " | " << r.min_length << " | "
         << newton_string(r.newton.nu) << " | " << (r.elliptic ? "yes" : "no") << " |\n";
    }
  }
  code = 0;
  return os.str();
}

std::string cmd_table(const Config& cfg, int& code) {
  Workspace ws = open_workspace(cfg);
  RigidTable t = ws.table();
  if (!cfg.spec.empty()) t = evaluate_table(t, cfg.spec);
  code = 0;
  if (cfg.format == "json") return render_json(t).dump(2) + "\n";
  if (cfg.format == "csv") return render_csv(t);
  return render_markdown(t, ws.name());
}

std::string cmd_verify(const Config& cfg, int& code) {
  Workspace ws = open_workspace(cfg);
  auto reports = run_suites(ws, cfg.suite);
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    j.push_back(r.to_json());
  }
  code = ok ? 0 : 1;
  return (reports.size() == 1 ? j[0] : j).dump(2) + "\n";
}

std::string cmd_reduce(const Config& cfg, int& code) {
  Workspace ws = open_workspace(cfg);
  const HeckeAlgebra& H = *ws.algebra();
  ExtAffElt w;
  try {
    w = ws.weyl().parse_word(cfg.word);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  CocenterReducer reducer(H, ws.classes(), true);
  CocenterCombination c = reducer.reduce(w);
  bool verified = true;
  for (const auto& M : ws.table().modules) {
    LaurentPoly lhs = M->trace(H.T(w));
    LaurentPoly rhs;
    for (const auto& [label, coeff] : c.coeffs) rhs += coeff * M->trace(H.T(c.reps.at(label)));
    if (!(lhs == rhs)) verified = false;
  }
  code = verified ? 0 : 1;
  return render(c, ws.weyl()) + "\n" + (verified ? "verified" : "trace mismatch") + "\n";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownPreset:
    case ErrorKind::NotCartan:
    case ErrorKind::InfiniteWeylGroup:
    case ErrorKind::NotReduced:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid character tables of affine Hecke algebras"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&cfg](CLI::App* sub) {
    auto* p = sub->add_option("--preset", cfg.preset, "sl2 | pgl2 | c2-aff | c2-ext");
    auto* d = sub->add_option("--datum", cfg.datum, "root datum JSON file")->check(CLI::ExistingFile);
    p->excludes(d);
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"md", "csv", "json"}));
    sub->add_option("--max-length", cfg.max_length, "class enumeration bound")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write output to file");
  };

  auto* classes = app.add_subcommand("classes", "Newton-zero conjugacy classes");
  common(classes);
  auto* table = app.add_subcommand("table", "rigid character table");
  common(table);
  table->add_option("--spec", cfg.spec, "evaluate at q1=2,...");
  auto* verify = app.add_subcommand("verify", "run property suites");
  common(verify);
  verify->add_option("--suite", cfg.suite);
  auto* reduce = app.add_subcommand("reduce", "reduce T_w in the cocenter");
  common(reduce);
  reduce->add_option("--word", cfg.word, "comma-separated generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  int code = 0;
  std::string output;
  try {
    if (*classes) output = cmd_classes(cfg, code);
    if (*table) output = cmd_table(cfg, code);
    if (*verify) output = cmd_verify(cfg, code);
    if (*reduce) output = cmd_reduce(cfg, code);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << output;
  }
  return code;
}
