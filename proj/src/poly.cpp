#include "rigid/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace rigid {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VarTableMismatch: return "VarTableMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroSubstitutionForUnit: return "ZeroSubstitutionForUnit";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotCartan: return "NotCartan";
    case ErrorKind::InfiniteWeylGroup: return "InfiniteWeylGroup";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::OmegaSearchExhausted: return "OmegaSearchExhausted";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::PlateauBudgetExceeded: return "PlateauBudgetExceeded";
    case ErrorKind::UnstableAtBound: return "UnstableAtBound";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonNewtonZeroLeaf: return "NonNewtonZeroLeaf";
    case ErrorKind::RelationFailed: return "RelationFailed";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      fail(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    fail(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  }
  Rational r(s, 10);
  if (r.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

// ---------------------------------------------------------------- VarTable

VarTablePtr VarTable::make(std::vector<Entry> entries) {
  if (entries.size() > kMaxVars) {
    fail(ErrorKind::InvalidArgument,
         "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& e : entries) {
    if (e.name.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(e.name).second) fail(ErrorKind::InvalidArgument, "duplicate variable " + e.name);
  }
  auto table = std::make_shared<VarTable>();
  table->entries_ = std::move(entries);
  bool has_sqrt = std::any_of(table->entries_.begin(), table->entries_.end(),
                              [](const Entry& e) { return e.kind == VarKind::ParamSqrt; });
  if (has_sqrt) {
    std::vector<Entry> q_entries;
    for (const auto& e : table->entries_) {
      if (e.kind == VarKind::ParamSqrt) {
        q_entries.push_back({e.q_name.empty() ? e.name + "^2" : e.q_name, VarKind::Param, ""});
      } else {
        q_entries.push_back(e);
      }
    }
    table->q_table_ = make(std::move(q_entries));
  }
  return table;
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  std::string key = lower(name);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (lower(entries_[i].name) == key) return i;
  }
  return std::nullopt;
}

bool VarTable::same_layout(const VarTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name != other.entries_[i].name || entries_[i].kind != other.entries_[i].kind) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- LaurentPoly

bool lex_less(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

bool zero_exps(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](std::int32_t e) { return e == 0; });
}

}  // namespace

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_.push_back({Exponents{}, Rational(value)});
}

LaurentPoly::LaurentPoly(const Rational& value) {
  if (value != 0) {
    terms_.push_back({Exponents{}, value});
    terms_.back().coeff.canonicalize();
  }
}

LaurentPoly LaurentPoly::constant(const Rational& value, VarTablePtr vars) {
  LaurentPoly p(value);
  p.vars_ = std::move(vars);
  return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::size_t index, int power) {
  if (!vars || index >= vars->size()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e{};
  e[index] = power;
  return monomial(std::move(vars), e, Rational(1));
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, const Exponents& exps, const Rational& coeff) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  if (coeff != 0) {
    p.terms_.push_back({exps, coeff});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return lex_less(b.exps, a.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    t.coeff.canonicalize();
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

VarTablePtr LaurentPoly::merge_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.vars_) return b.vars_;
  if (!b.vars_ || a.vars_ == b.vars_) return a.vars_;
  if (a.vars_->same_layout(*b.vars_)) return a.vars_;
  fail(ErrorKind::VarTableMismatch, "operands use different variable tables");
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && zero_exps(terms_[0].exps));
}

Rational LaurentPoly::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

bool LaurentPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exps[var] != 0; });
}

bool LaurentPoly::involves_kind(VarKind kind) const {
  if (!vars_) return false;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i].kind == kind && involves(i)) return true;
  }
  return false;
}

LaurentPoly LaurentPoly::with_vars(VarTablePtr vars) const {
  if (vars_ && vars && !vars_->same_layout(*vars)) {
    fail(ErrorKind::VarTableMismatch, "cannot rebind polynomial to a different table");
  }
  LaurentPoly p = *this;
  p.vars_ = std::move(vars);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  vars_ = merge_vars(*this, other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && lex_less(j->exps, i->exps))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || lex_less(i->exps, j->exps)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->exps, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.vars_ = LaurentPoly::merge_vars(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      p.terms_.push_back({add_exps(s.exps, t.exps), s.coeff * t.coeff});
    }
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && !a.vars_->same_layout(*b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& b) const {
  if (b.is_zero()) fail(ErrorKind::NotDivisible, "division by zero");
  VarTablePtr vars = merge_vars(*this, b);
  if (is_zero()) return LaurentPoly::constant(0, vars);
  if (b.terms_.size() == 1) {
    LaurentPoly q = *this;
    q.vars_ = vars;
    for (auto& t : q.terms_) {
      t.exps = sub_exps(t.exps, b.terms_[0].exps);
      t.coeff /= b.terms_[0].coeff;
    }
    return q;
  }
  // Every quotient term lies in the per-variable degree box and between
  // TT(a)/TT(b) and LT(a)/LT(b) in the (group) lex order; leaving either
  // region proves non-divisibility and bounds the loop.
  Exponents lo{}, hi{};
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    auto [amin, amax] = std::minmax_element(terms_.begin(), terms_.end(), [v](const Term& x, const Term& y) {
      return x.exps[v] < y.exps[v];
    });
    auto [bmin, bmax] = std::minmax_element(b.terms_.begin(), b.terms_.end(), [v](const Term& x, const Term& y) {
      return x.exps[v] < y.exps[v];
    });
    lo[v] = amin->exps[v] - bmin->exps[v];
    hi[v] = amax->exps[v] - bmax->exps[v];
    if (lo[v] > hi[v]) return std::nullopt;
  }
  const Exponents lower = sub_exps(terms_.back().exps, b.terms_.back().exps);
  const Term& lead = b.terms_.front();
  LaurentPoly r = *this;
  r.vars_ = vars;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    Term t{sub_exps(r.terms_.front().exps, lead.exps), r.terms_.front().coeff / lead.coeff};
    if (lex_less(t.exps, lower)) return std::nullopt;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (t.exps[v] < lo[v] || t.exps[v] > hi[v]) return std::nullopt;
    }
    r -= LaurentPoly::monomial(vars, t.exps, t.coeff) * b;
    quotient.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(vars, std::move(quotient));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& b) const {
  auto q = try_divide(b);
  if (!q) fail(ErrorKind::NotDivisible, to_string(*this) + " is not divisible by " + to_string(b));
  return *q;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1) {
      fail(ErrorKind::NotDivisible, "negative power of a non-unit " + to_string(*this));
    }
    Exponents e{};
    for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = -terms_[0].exps[i];
    return monomial(vars_, e, Rational(1) / terms_[0].coeff).pow(-n);
  }
  LaurentPoly result = LaurentPoly::constant(1, vars_);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// ------------------------------------------------------------ substitution

LaurentPoly evaluate(const LaurentPoly& p, const std::vector<Substitution>& assignment) {
  if (!p.vars()) return p;
  const std::size_t nv = p.vars() ? p.vars()->size() : 0;
  std::vector<const LaurentPoly*> value(kMaxVars, nullptr);
  for (const auto& s : assignment) {
    if (s.var >= nv) fail(ErrorKind::InvalidArgument, "assignment to unknown variable index");
    if (s.value.is_zero()) {
      fail(ErrorKind::ZeroSubstitutionForUnit, "variable " + (*p.vars())[s.var].name + " mapped to 0");
    }
    value[s.var] = &s.value;
  }
  LaurentPoly out = LaurentPoly::constant(0, p.vars());
  std::map<std::pair<std::size_t, int>, LaurentPoly> powers;
  for (const auto& t : p.terms()) {
    Exponents rest = t.exps;
    LaurentPoly term = LaurentPoly::constant(t.coeff, p.vars());
    for (std::size_t v = 0; v < nv; ++v) {
      if (value[v] == nullptr || t.exps[v] == 0) continue;
      auto key = std::make_pair(v, t.exps[v]);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, value[v]->pow(t.exps[v])).first;
      term *= it->second;
      rest[v] = 0;
    }
    out += term * LaurentPoly::monomial(p.vars(), rest, 1);
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images, VarTablePtr target) {
  const std::size_t nv = p.vars() ? p.vars()->size() : 0;
  if (images.size() < nv) fail(ErrorKind::InvalidArgument, "substitute: missing images");
  LaurentPoly out = LaurentPoly::constant(0, target);
  for (const auto& t : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(t.coeff, target);
    for (std::size_t v = 0; v < nv; ++v) {
      if (t.exps[v] != 0) term *= images[v].pow(t.exps[v]).with_vars(target);
    }
    out += term;
  }
  return out;
}

std::vector<Substitution> parse_assignment(std::string_view text, const VarTablePtr& vars) {
  std::vector<Substitution> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, "expected name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
    auto idx = vars ? vars->find(name) : std::nullopt;
    if (!idx) fail(ErrorKind::Parse, "unknown variable '" + name + "'");
    out.push_back({*idx, LaurentPoly::constant(parse_rational(item.substr(eq + 1)), vars)});
  }
  return out;
}

// --------------------------------------------------------------- rendering

namespace {

std::string monomial_string(const Exponents& e, const VarTablePtr& vars) {
  std::string out;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars ? (*vars)[v].name : ("x" + std::to_string(v));
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_string(t.exps, p.vars());
    Rational c = t.coeff;
    if (!first) {
      out += (c < 0) ? " - " : " + ";
      c = abs(c);
    }
    out += to_string(c);
    if (!mono.empty()) out += "*" + mono;
    first = false;
  }
  return out;
}

std::string to_compact_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_string(t.exps, p.vars());
    Rational c = t.coeff;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

LaurentPoly render_in_q(const LaurentPoly& p) {
  if (!p.vars() || !p.vars()->q_table()) return p;
  const auto& vars = *p.vars();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Term q{t.exps, t.coeff};
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].kind != VarKind::ParamSqrt) continue;
      if (t.exps[v] % 2 != 0) {
        fail(ErrorKind::OddDegree, "odd degree in " + vars[v].name + " in " + to_string(p));
      }
      q.exps[v] = t.exps[v] / 2;
    }
    terms.push_back(std::move(q));
  }
  return LaurentPoly::from_terms(vars.q_table(), std::move(terms));
}

LaurentPoly lift_from_q(const LaurentPoly& p, const VarTablePtr& sqrt_table) {
  if (!p.vars()) return p.with_vars(sqrt_table);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Term s{t.exps, t.coeff};
    for (std::size_t v = 0; v < sqrt_table->size(); ++v) {
      if ((*sqrt_table)[v].kind == VarKind::ParamSqrt) s.exps[v] = 2 * t.exps[v];
    }
    terms.push_back(std::move(s));
  }
  return LaurentPoly::from_terms(sqrt_table, std::move(terms));
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarTablePtr& vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p.with_vars(vars_);
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        LaurentPoly d = unary();
        if (!d.is_constant() || d.is_zero()) error("division by a non-constant or zero");
        acc *= LaurentPoly(Rational(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_ ? vars_->find(name) : std::nullopt;
      if (!idx) error("unknown variable '" + name + "'");
      return LaurentPoly::variable(vars_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VarTablePtr& vars) {
  return PolyParser(text, vars).parse();
}

// -------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) { return scalar(n, LaurentPoly(1)); }

PolyMatrix PolyMatrix::scalar(std::size_t n, const LaurentPoly& value) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const LaurentPoly& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& e : out.data_) e = s * e;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

LaurentPoly PolyMatrix::trace() const {
  LaurentPoly t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = block(i, j);
  }
}

void PolyMatrix::add_block(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) += block(i, j);
  }
}

PolyMatrix evaluate(const PolyMatrix& m, const std::vector<Substitution>& assignment) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), assignment);
  }
  return out;
}

PolyMatrix substitute(const PolyMatrix& m, const std::vector<LaurentPoly>& images, VarTablePtr target) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = substitute(m(i, j), images, target);
  }
  return out;
}

// ------------------------------------------------------------ determinants

LaurentPoly det_bareiss(const PolyMatrix& input) {
  if (input.rows() != input.cols()) {
    fail(ErrorKind::NonSquare, std::to_string(input.rows()) + "x" + std::to_string(input.cols()));
  }
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPoly(1);
  PolyMatrix m = input;
  VarTablePtr vars;
  for (std::size_t i = 0; i < n && !vars; ++i) {
    for (std::size_t j = 0; j < n && !vars; ++j) vars = m(i, j).vars();
  }

  // Clear negative exponents row by row; the shifts multiply the determinant.
  Exponents cleared{};
  for (std::size_t i = 0; i < n; ++i) {
    Exponents shift{};
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : m(i, j).terms()) {
        for (std::size_t v = 0; v < kMaxVars; ++v) shift[v] = std::min(shift[v], t.exps[v]);
      }
    }
    if (zero_exps(shift)) continue;
    Exponents up{};
    for (std::size_t v = 0; v < kMaxVars; ++v) up[v] = -shift[v];
    LaurentPoly factor = LaurentPoly::monomial(vars, up, 1);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = factor * m(i, j);
    cleared = add_exps(cleared, up);
  }

  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      if (pivot == n || m(r, k).num_terms() < m(pivot, k).num_terms()) pivot = r;
    }
    if (pivot == n) return LaurentPoly::constant(0, vars);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = num.divide_exact(prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  if (!zero_exps(cleared)) det = det.divide_exact(LaurentPoly::monomial(vars, cleared, 1));
  return det.with_vars(vars);
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k].size() != n) fail(ErrorKind::NonSquare, "det_rational");
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::size_t rank_rational(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> to_rational_matrix(const PolyMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).constant_value();
  }
  return out;
}

}  // namespace rigid
