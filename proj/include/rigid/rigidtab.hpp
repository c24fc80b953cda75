#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigid/conj.hpp"
#include "rigid/repn.hpp"

namespace rigid {

/// Column of a rigid table. Modules are selected by their Q-rendered generator traces.
struct ColumnSpec {
  std::string name;
  std::string kind;  // onedim | lift | induced
  Subset J = 0;      // induced: level of the inducing module
  std::map<std::string, std::string> signature;
  // lift: finite C2 irrep on simples (a, b); the remaining simples act by lift_scalar
  std::pair<int, int> lift_simples{0, 1};
  std::string lift_scalar = "-1";
  std::map<int, int> lift_copies;  // simple -> simple whose matrix it reuses
  std::string lift_omega;          // scalar for the nontrivial element of Omega
};

struct PresetManifest {
  std::string preset;
  std::string title;
  std::vector<std::string> row_words;  // comma-separated words, "" is the identity
  std::vector<ColumnSpec> cols;
  std::string determinant;             // expected determinant in Q variables, "" when none
  std::map<std::string, std::string> identify;  // Q variables identified before comparing
  bool determinant_up_to_scalar = false;
  std::size_t classes = 0;
  std::size_t elliptic = 0;
};

std::optional<PresetManifest> preset_manifest(std::string_view name);

enum class TwistMode { Trivial, Symbolic };

struct RigidTable {
  std::string name;
  std::vector<ConjClassRecord> rows;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<ModulePtr> modules;
  PolyMatrix entries;    // v variables
  PolyMatrix q_entries;  // rendered in Q
};

ModulePtr build_column(const HeckeAlgebraPtr& H, const ColumnSpec& c, TwistMode mode);
/// Substitutes rational values into a module's matrices and recertifies it.
ModulePtr evaluate_module(const FinDimModule& M, const std::vector<Substitution>& assignment);

/// "T1T2", "(T0T1)^2", "tau", "1".
std::string row_label(const AffineWeyl& aw, const std::string& class_label);

RigidTable build_rigid_table(const HeckeAlgebraPtr& H, const ClassList& classes,
                             const std::vector<std::string>& row_words, const std::vector<ColumnSpec>& cols,
                             TwistMode mode = TwistMode::Trivial, int jobs = 1);
/// Default panel for data without a manifest: full-level one-dimensional modules and i_{}(1).
std::vector<ColumnSpec> default_columns(const HeckeAlgebraPtr& H);

std::string render_markdown(const RigidTable& t, const std::string& corner);
std::string render_csv(const RigidTable& t);
nlohmann::json render_json(const RigidTable& t);
/// Entries evaluated at a Q assignment ("Q1=2,Q2=3"); every entry must become rational.
RigidTable evaluate_table(const RigidTable& t, const std::string& spec);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Q-table determinant after the identifications; compared up to sign, or up to a
/// nonzero rational constant when up_to_scalar is set.
Check determinant_check(const RigidTable& t, const std::string& expected,
                        const std::map<std::string, std::string>& identify, bool up_to_scalar = false);
/// Q0 -> 1, Q1 <-> Q2 in the affine C2 determinant against c (1+Q1)^3 (1+Q2)^5 (Q1+Q2)(1+Q1 Q2).
Check specialization_check_extended_c2(const RigidTable& c2_table, Rational* constant = nullptr);

/// Preset (or datum) artifacts shared by the suites.
class Workspace {
 public:
  Workspace(BasedRootDatum datum, std::string name, int max_length = 8, int jobs = 1);

  const std::string& name() const { return name_; }
  const AffineWeyl& weyl() const { return *aw_; }
  const HeckeAlgebraPtr& algebra() const { return H_; }
  const ClassList& classes() const { return classes_; }
  const std::optional<PresetManifest>& manifest() const { return manifest_; }
  int jobs() const { return jobs_; }
  std::vector<std::string> row_words() const;
  std::vector<ColumnSpec> columns() const;
  const RigidTable& table();
  const RigidTable& symbolic_table();

 private:
  std::string name_;
  AffineWeylPtr aw_;
  HeckeAlgebraPtr H_;
  ClassList classes_;
  std::optional<PresetManifest> manifest_;
  int jobs_;
  std::optional<RigidTable> table_;
  std::optional<RigidTable> symbolic_;
};

const std::vector<std::string>& suite_names();
/// One suite by name, or every suite for "all". InvalidArgument on unknown names.
std::vector<SuiteReport> run_suites(Workspace& ws, const std::string& suite);
SuiteReport run_suite(Workspace& ws, const std::string& suite);

}  // namespace rigid
