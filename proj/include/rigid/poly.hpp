#pragma once

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigid/errors.hpp"

namespace rigid {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Variable kinds. ParamSqrt variables v_i stand for square roots of the
/// Hecke parameters; Param variables are their squares Q_i = v_i^2 and only
/// appear in the table produced by render_in_q().
enum class VarKind { ParamSqrt, Param, Twist };

constexpr std::size_t kMaxVars = 8;
using Exponents = std::array<std::int32_t, kMaxVars>;

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered variable names for one computation context. The order fixes the
/// monomial order, so a table is never mutated after construction.
class VarTable {
 public:
  struct Entry {
    std::string name;
    VarKind kind;
    std::string q_name;  // name of v^2 for ParamSqrt entries
  };

  static VarTablePtr make(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Table in which each ParamSqrt variable v is replaced by Param variable
  /// q_name(v). Null for tables without ParamSqrt variables.
  const VarTablePtr& q_table() const { return q_table_; }

  bool same_layout(const VarTable& other) const;

 private:
  std::vector<Entry> entries_;
  VarTablePtr q_table_;
};

struct Term {
  Exponents exps{};
  Rational coeff;
};

/// Exact Laurent polynomial with rational coefficients. Terms are kept sorted
/// in descending lexicographic order of exponent vectors (variable 0 most
/// significant) with no zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static LaurentPoly constant(const Rational& value, VarTablePtr vars);
  static LaurentPoly variable(VarTablePtr vars, std::size_t index, int power = 1);
  static LaurentPoly monomial(VarTablePtr vars, const Exponents& exps, const Rational& coeff);
  static LaurentPoly from_terms(VarTablePtr vars, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()
  bool involves(std::size_t var) const;
  bool involves_kind(VarKind kind) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Quotient q with b*q == *this, or nullopt when b does not divide in the
  /// Laurent ring. Throws NotDivisible on b == 0.
  std::optional<LaurentPoly> try_divide(const LaurentPoly& b) const;
  LaurentPoly divide_exact(const LaurentPoly& b) const;

  /// Integer power; negative exponents need a unit (constant times monomial).
  LaurentPoly pow(int n) const;

  /// Rebinds a constant (table-free) polynomial to a table.
  LaurentPoly with_vars(VarTablePtr vars) const;

 private:
  void normalize();
  static VarTablePtr merge_vars(const LaurentPoly& a, const LaurentPoly& b);

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

bool lex_less(const Exponents& a, const Exponents& b);

/// Substitution value for evaluate(): a rational or a polynomial over the
/// same table as the input.
struct Substitution {
  std::size_t var;
  LaurentPoly value;
};

/// Substitution homomorphism; unassigned variables stay symbolic.
LaurentPoly evaluate(const LaurentPoly& p, const std::vector<Substitution>& assignment);

/// Ring map into another table: images[i] is the image of variable i.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images,
                       VarTablePtr target);

/// Parses "name=value,name=value" into an assignment; names are matched
/// exactly first, then case-insensitively.
std::vector<Substitution> parse_assignment(std::string_view text, const VarTablePtr& vars);

/// Canonical rendering, e.g. "-1*Q0^3 + 2*Q0^2*Q1". Used in golden files.
std::string to_string(const LaurentPoly& p);
/// Compact rendering, e.g. "Q1-1". Used in human-facing tables.
std::string to_compact_string(const LaurentPoly& p);

/// Rewrites p in the variables Q_i = v_i^2. Throws OddDegree if some term has
/// an odd exponent on a ParamSqrt variable.
LaurentPoly render_in_q(const LaurentPoly& p);
/// Inverse of render_in_q: substitutes Q_i = v_i^2 back into the sqrt table.
LaurentPoly lift_from_q(const LaurentPoly& p, const VarTablePtr& sqrt_table);

/// Parses an arithmetic expression (+ - * ^, parentheses, integers,
/// rationals a/b, variables of `vars`).
LaurentPoly parse_poly(std::string_view text, const VarTablePtr& vars);

/// Dense rectangular matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix scalar(std::size_t n, const LaurentPoly& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  LaurentPoly trace() const;
  bool is_zero() const;
  PolyMatrix transposed() const;
  /// Block (r0, c0) of size rows x cols is overwritten by `block`.
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);
  void add_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

PolyMatrix evaluate(const PolyMatrix& m, const std::vector<Substitution>& assignment);
PolyMatrix substitute(const PolyMatrix& m, const std::vector<LaurentPoly>& images,
                      VarTablePtr target);

/// Determinant by Bareiss fraction-free elimination. Rows are first cleared
/// of negative exponents by a monomial factor that is divided back out.
LaurentPoly det_bareiss(const PolyMatrix& m);

/// Exact rational Gaussian elimination helpers.
Rational det_rational(std::vector<std::vector<Rational>> m);
std::size_t rank_rational(std::vector<std::vector<Rational>> m);
/// Converts a matrix whose entries are constants.
std::vector<std::vector<Rational>> to_rational_matrix(const PolyMatrix& m);

}  // namespace rigid
