#include "rigid/hecke.hpp"

#include <algorithm>
#include <deque>

namespace rigid {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

void BernElt::add(const IntVec& x, int w, const LaurentPoly& c) { accumulate(terms, BKey{x, w}, c); }
void TLeftElt::add(const IntVec& x, int w, const LaurentPoly& c) { accumulate(terms, BKey{x, w}, c); }
void add_term(HeckeElt& h, const ExtAffElt& w, const LaurentPoly& c) { accumulate(h, w, c); }

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r = a;
  for (const auto& [w, c] : b) add_term(r, w, c);
  return r;
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r = a;
  for (const auto& [w, c] : b) add_term(r, w, -c);
  return r;
}

HeckeElt operator*(const LaurentPoly& s, const HeckeElt& h) {
  HeckeElt r;
  for (const auto& [w, c] : h) add_term(r, w, s * c);
  return r;
}

BernElt operator+(const BernElt& a, const BernElt& b) {
  BernElt r = a;
  for (const auto& [k, c] : b.terms) r.add(k.first, k.second, c);
  return r;
}

BernElt operator-(const BernElt& a, const BernElt& b) {
  BernElt r = a;
  for (const auto& [k, c] : b.terms) r.add(k.first, k.second, -c);
  return r;
}

BernElt operator*(const LaurentPoly& s, const BernElt& h) {
  BernElt r;
  for (const auto& [k, c] : h.terms) r.add(k.first, k.second, s * c);
  return r;
}

// ------------------------------------------------------------ construction

HeckeAlgebra::HeckeAlgebra(AffineWeylPtr aw, VarTablePtr vars, std::vector<int> simple_var)
    : aw_(std::move(aw)), vars_(std::move(vars)), simple_var_(std::move(simple_var)) {
  if (simple_var_.size() != aw_->num_simples()) {
    fail(ErrorKind::InvalidArgument, "one parameter variable is needed per affine simple reflection");
  }
  for (int v : simple_var_) {
    if (v < 0 || static_cast<std::size_t>(v) >= vars_->size() || (*vars_)[v].kind != VarKind::ParamSqrt) {
      fail(ErrorKind::InvalidArgument, "parameter variable is not a ParamSqrt variable");
    }
  }
}

VarTablePtr HeckeAlgebra::default_vars(const AffineWeyl& aw) {
  std::vector<VarTable::Entry> entries;
  const bool overridden = !aw.datum().param_orbit_names.empty();
  for (const auto& o : aw.orbits()) {
    entries.push_back({"v" + o.name, VarKind::ParamSqrt, overridden ? o.name : "Q" + o.name});
  }
  for (std::size_t i = 0; i < aw.m(); ++i) entries.push_back({"z" + std::to_string(i + 1), VarKind::Twist, ""});
  if (entries.size() > kMaxVars) {
    fail(ErrorKind::InvalidArgument, "datum needs " + std::to_string(entries.size()) + " variables, limit is " +
                                         std::to_string(kMaxVars));
  }
  return VarTable::make(entries);
}

HeckeAlgebraPtr HeckeAlgebra::make(AffineWeylPtr aw) {
  auto vars = default_vars(*aw);
  std::vector<int> sv;
  for (std::size_t s = 0; s < aw->num_simples(); ++s) sv.push_back(aw->orbit_of(static_cast<int>(s)));
  return std::make_shared<HeckeAlgebra>(aw, vars, sv);
}

LaurentPoly HeckeAlgebra::v(int s) const { return LaurentPoly::variable(vars_, simple_var_[s]); }
LaurentPoly HeckeAlgebra::Q(int s) const { return LaurentPoly::variable(vars_, simple_var_[s], 2); }

LaurentPoly HeckeAlgebra::v_of(const ExtAffElt& w) const {
  LaurentPoly r = LaurentPoly::constant(1, vars_);
  for (int s : word(w).first) r *= v(s);
  return r;
}

LaurentPoly HeckeAlgebra::v_finite(int w) const {
  LaurentPoly r = LaurentPoly::constant(1, vars_);
  for (int i : aw_->W().word(w)) r *= v(i);
  return r;
}

int HeckeAlgebra::twist_var(std::size_t i) const {
  auto idx = vars_->find("z" + std::to_string(i + 1));
  return idx ? static_cast<int>(*idx) : -1;
}

const std::pair<std::vector<int>, int>& HeckeAlgebra::word(const ExtAffElt& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
  }
  auto rw = aw_->reduced_word(w);
  std::lock_guard<std::mutex> lock(mutex_);
  return words_.emplace(w, std::move(rw)).first->second;
}

// --------------------------------------------------------- Iwahori-Matsumoto

HeckeElt HeckeAlgebra::one() const { return T(aw_->identity()); }

HeckeElt HeckeAlgebra::T(const ExtAffElt& w) const { return {{w, LaurentPoly::constant(1, vars_)}}; }

HeckeElt HeckeAlgebra::mul_simple_right(const HeckeElt& h, int s) const {
  HeckeElt r;
  const ExtAffElt& se = aw_->simple(s);
  for (const auto& [w, c] : h) {
    ExtAffElt ws = aw_->mul(w, se);
    if (aw_->length(ws) > aw_->length(w)) {
      add_term(r, ws, c);
    } else {
      add_term(r, w, (Q(s) - 1) * c);
      add_term(r, ws, Q(s) * c);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul_simple_left(int s, const HeckeElt& h) const {
  HeckeElt r;
  const ExtAffElt& se = aw_->simple(s);
  for (const auto& [w, c] : h) {
    ExtAffElt sw = aw_->mul(se, w);
    if (aw_->length(sw) > aw_->length(w)) {
      add_term(r, sw, c);
    } else {
      add_term(r, w, (Q(s) - 1) * c);
      add_term(r, sw, Q(s) * c);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r;
  for (const auto& [w, c] : b) {
    const auto& [simples, o] = word(w);
    HeckeElt cur = a;
    for (int s : simples) cur = mul_simple_right(cur, s);
    for (const auto& [u, d] : cur) add_term(r, aw_->mul(u, aw_->omega()[o]), d * c);
  }
  return r;
}

HeckeElt HeckeAlgebra::T_inverse(const ExtAffElt& w) const {
  const auto& [simples, o] = word(w);
  HeckeElt r = T(aw_->omega()[aw_->omega_inv(o)]);
  for (auto it = simples.rbegin(); it != simples.rend(); ++it) {
    int s = *it;
    HeckeElt inv;
    LaurentPoly qi = Q(s).pow(-1);
    add_term(inv, aw_->simple(s), qi);
    add_term(inv, aw_->identity(), qi - 1);
    r = mul(r, inv);
  }
  return r;
}

// ------------------------------------------------------------------ Bernstein

BernElt HeckeAlgebra::bern_one() const { return theta(IntVec(aw_->m(), 0)); }

BernElt HeckeAlgebra::theta(const IntVec& x) const {
  BernElt b;
  b.add(x, 0, LaurentPoly::constant(1, vars_));
  return b;
}

BernElt HeckeAlgebra::bern_T_finite(int w) const {
  BernElt b;
  b.add(IntVec(aw_->m(), 0), w, LaurentPoly::constant(1, vars_));
  return b;
}

BernElt HeckeAlgebra::bern_T_finite_inverse(int w) const {
  const auto& W = aw_->W();
  BernElt r = bern_one();
  const auto& word = W.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::size_t i = static_cast<std::size_t>(*it);
    LaurentPoly qi = Q(static_cast<int>(i)).pow(-1);
    r = qi * right_mul_Ts(r, i) + (qi - 1) * r;
  }
  return r;
}

ThetaPoly HeckeAlgebra::bl_correction(std::size_t i, const IntVec& x) const {
  const auto& alpha = aw_->datum().simple_roots[i];
  const std::int64_t n = dot(x, aw_->datum().simple_coroots[i]);
  ThetaPoly out;
  if (n == 0) return out;
  const int s = static_cast<int>(i);
  if (!aw_->two_xvee(i)) {
    const LaurentPoly c = Q(s) - 1;
    if (n > 0) {
      for (std::int64_t k = 0; k < n; ++k) accumulate(out, sub(x, scale(k, alpha)), c);
    } else {
      for (std::int64_t k = 1; k <= -n; ++k) accumulate(out, add(x, scale(k, alpha)), -c);
    }
    return out;
  }
  // alpha^vee in 2X^vee: ((Q_s - 1) + theta_{-alpha}(v_s v_t - v_s / v_t)) (theta_x - theta_{sx}) / (1 - theta_{-2 alpha})
  const int t = aw_->tilde(i);
  const LaurentPoly c0 = Q(s) - 1;
  const LaurentPoly c1 = v(s) * v(t) - v(s) * v(t).pow(-1);
  std::vector<std::pair<IntVec, LaurentPoly>> g;
  const std::int64_t p = std::abs(n) / 2;
  if (n > 0) {
    for (std::int64_t k = 0; k < p; ++k) g.push_back({sub(x, scale(2 * k, alpha)), LaurentPoly(1)});
  } else {
    for (std::int64_t k = 1; k <= p; ++k) g.push_back({add(x, scale(2 * k, alpha)), LaurentPoly(-1)});
  }
  for (const auto& [y, sign] : g) {
    accumulate(out, y, sign * c0);
    accumulate(out, sub(y, alpha), sign * c1);
  }
  return out;
}

const std::map<int, LaurentPoly>& HeckeAlgebra::finite_mul(int a, int b) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = finite_cache_.find({a, b});
    if (it != finite_cache_.end()) return it->second;
  }
  const auto& W = aw_->W();
  std::map<int, LaurentPoly> cur{{a, LaurentPoly::constant(1, vars_)}};
  for (int i : W.word(b)) {
    std::map<int, LaurentPoly> next;
    int si = W.simple(static_cast<std::size_t>(i));
    for (const auto& [w, c] : cur) {
      int ws = W.mul(w, si);
      if (W.length(ws) > W.length(w)) {
        accumulate(next, ws, c);
      } else {
        accumulate(next, w, (Q(i) - 1) * c);
        accumulate(next, ws, Q(i) * c);
      }
    }
    cur = std::move(next);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return finite_cache_.emplace(std::make_pair(a, b), std::move(cur)).first->second;
}

BernElt HeckeAlgebra::left_mul_Ts(std::size_t i, const BernElt& b) const {
  // T_s theta_x = theta_{sx} T_s - C(sx)
  const auto& W = aw_->W();
  const int si = W.simple(i);
  BernElt r;
  for (const auto& [key, c] : b.terms) {
    const auto& [x, w] = key;
    IntVec sx = W.act(si, x);
    for (const auto& [u, d] : finite_mul(si, w)) r.add(sx, u, c * d);
    for (const auto& [z, d] : bl_correction(i, sx)) r.add(z, w, -(c * d));
  }
  return r;
}

BernElt HeckeAlgebra::right_mul_Ts(const BernElt& b, std::size_t i) const {
  return right_mul_T(b, aw_->W().simple(i));
}

BernElt HeckeAlgebra::left_mul_T(int w, const BernElt& b) const {
  const auto& word = aw_->W().word(w);
  BernElt r = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = left_mul_Ts(static_cast<std::size_t>(*it), r);
  return r;
}

BernElt HeckeAlgebra::right_mul_T(const BernElt& b, int w) const {
  BernElt r;
  for (const auto& [key, c] : b.terms) {
    for (const auto& [u, d] : finite_mul(key.second, w)) r.add(key.first, u, c * d);
  }
  return r;
}

BernElt HeckeAlgebra::bern_mul(const BernElt& a, const BernElt& b) const {
  BernElt r;
  std::map<int, BernElt> moved;  // T_w * b, per finite part w of a
  for (const auto& [key, c] : a.terms) {
    auto it = moved.find(key.second);
    if (it == moved.end()) it = moved.emplace(key.second, left_mul_T(key.second, b)).first;
    for (const auto& [k2, d] : it->second.terms) r.add(add(key.first, k2.first), k2.second, c * d);
  }
  return r;
}

TLeftElt HeckeAlgebra::to_tleft(const BernElt& b) const {
  // (T_u theta_y) T_s = (T_u T_s) theta_{sy} + T_u C(y)
  const auto& W = aw_->W();
  TLeftElt out;
  for (const auto& [key, c] : b.terms) {
    TLeftElt cur;
    cur.add(key.first, 0, c);
    for (int i : W.word(key.second)) {
      const int si = W.simple(static_cast<std::size_t>(i));
      TLeftElt next;
      for (const auto& [k2, d] : cur.terms) {
        const auto& [y, u] = k2;
        IntVec sy = W.act(si, y);
        for (const auto& [v2, e] : finite_mul(u, si)) next.add(sy, v2, d * e);
        for (const auto& [z, e] : bl_correction(static_cast<std::size_t>(i), y)) next.add(z, u, d * e);
      }
      cur = std::move(next);
    }
    for (const auto& [k2, d] : cur.terms) out.add(k2.first, k2.second, d);
  }
  return out;
}

BernElt HeckeAlgebra::from_tleft(const TLeftElt& t) const {
  BernElt out;
  for (const auto& [key, c] : t.terms) {
    BernElt th;
    th.add(key.first, 0, c);
    out = out + left_mul_T(key.second, th);
  }
  return out;
}

BernElt HeckeAlgebra::generator_bernstein(int s) const {
  const AffineSimple& sim = aw_->simples()[s];
  if (sim.finite) return bern_T_finite(aw_->W().simple(static_cast<std::size_t>(sim.finite_index)));
  // T_{s0} = v(t_{-gamma}) theta_{-gamma} T_{s_gamma}^{-1}, from t_{-gamma} = s0 s_gamma with lengths adding.
  const int sg = aw_->W().reflection(sim.gamma_root);
  const IntVec minus_gamma = neg(aw_->roots().roots[sim.gamma_root]);
  const ExtAffElt t = aw_->translation(minus_gamma);
  if (aw_->length(t) != 1 + aw_->W().length(sg)) {
    fail(ErrorKind::InvalidArgument, "t_{-gamma} = s0 s_gamma is not length-additive");
  }
  BernElt r = v_of(t) * bern_mul(theta(minus_gamma), bern_T_finite_inverse(sg));
  return r;
}

BernElt HeckeAlgebra::omega_bernstein(int o) const {
  if (o == 0) return bern_one();
  // omega = t_x u with x dominant: t_x = omega w' with w' = omega^{-1} t_x finite.
  const ExtAffElt& om = aw_->omega()[o];
  if (!aw_->is_dominant(om.x)) fail(ErrorKind::InvalidArgument, "length-zero element with non-dominant translation");
  const ExtAffElt t = aw_->translation(om.x);
  const ExtAffElt wp = aw_->mul(aw_->inv(om), t);
  if (!is_zero(wp.x) || aw_->length(t) != aw_->W().length(wp.w)) {
    fail(ErrorKind::InvalidArgument, "omega^{-1} t_x is not a finite element of matching length");
  }
  return v_of(t) * bern_mul(theta(om.x), bern_T_finite_inverse(wp.w));
}

const BernElt& HeckeAlgebra::bern_of(const ExtAffElt& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bern_cache_.find(w);
    if (it != bern_cache_.end()) return it->second;
  }
  BernElt r;
  if (w == aw_->identity()) {
    r = bern_one();
  } else if (w.x == IntVec(aw_->m(), 0)) {
    r = bern_T_finite(w.w);
  } else {
    const auto& [simples, o] = word(w);
    if (simples.empty()) {
      r = omega_bernstein(o);
    } else {
      // T_w = T_{w s^{-1}} T_s along the last letter.
      const int s = simples.back();
      ExtAffElt prefix = aw_->from_word(std::vector<int>(simples.begin(), simples.end() - 1), 0);
      r = bern_mul(bern_mul(bern_of(prefix), generator_bernstein(s)), omega_bernstein(o));
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return bern_cache_.emplace(w, std::move(r)).first->second;
}

BernElt HeckeAlgebra::to_bernstein(const HeckeElt& h) const {
  BernElt r;
  for (const auto& [w, c] : h) r = r + c * bern_of(w);
  return r;
}

const HeckeElt& HeckeAlgebra::theta_im(const IntVec& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = theta_cache_.find(x);
    if (it != theta_cache_.end()) return it->second;
  }
  // theta_x = v(t_{x1})^{-1} v(t_{x2}) T_{t_{x1}} T_{t_{x2}}^{-1}, x = x1 - x2, both dominant,
  // with x2 the shortest dominant element lifting x into the dominant cone.
  const auto& coroots = aw_->datum().simple_coroots;
  std::vector<std::int64_t> need;
  std::int64_t radius = 1;
  for (const auto& c : coroots) {
    need.push_back(std::max<std::int64_t>(0, -dot(x, c)));
    radius = std::max(radius, 2 * need.back() + 2);
  }
  IntVec x2;
  int best = -1;
  IntVec cand(aw_->m(), -radius);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < coroots.size() && ok; ++i) ok = dot(cand, coroots[i]) >= need[i];
    if (ok) {
      int l = aw_->length(aw_->translation(cand));
      if (best < 0 || l < best) {
        best = l;
        x2 = cand;
      }
    }
    std::size_t i = 0;
    while (i < cand.size() && cand[i] == radius) cand[i++] = -radius;
    if (i == cand.size()) break;
    ++cand[i];
  }
  if (best < 0) fail(ErrorKind::InvalidArgument, "no dominant lift found for theta" + to_string(x));
  const IntVec x1 = add(x, x2);
  const ExtAffElt t1 = aw_->translation(x1), t2 = aw_->translation(x2);
  HeckeElt r = v_of(t1).pow(-1) * v_of(t2) * mul(T(t1), T_inverse(t2));
  std::lock_guard<std::mutex> lock(mutex_);
  return theta_cache_.emplace(x, std::move(r)).first->second;
}

HeckeElt HeckeAlgebra::to_im(const BernElt& b) const {
  HeckeElt r;
  for (const auto& [key, c] : b.terms) {
    HeckeElt th = theta_im(key.first);
    r = r + c * mul(th, T(aw_->finite(key.second)));
  }
  return r;
}

std::map<int, BernElt> HeckeAlgebra::coset_normal_form(const BernElt& h, Subset J) const {
  const auto& W = aw_->W();
  std::map<int, TLeftElt> parts;
  for (const auto& [key, c] : to_tleft(h).terms) {
    auto [u, wj] = W.coset_factor(key.second, J);
    parts[u].add(key.first, wj, c);
  }
  std::map<int, BernElt> out;
  for (auto& [u, t] : parts) {
    BernElt b = from_tleft(t);
    if (!b.is_zero()) out.emplace(u, std::move(b));
  }
  return out;
}

BernElt HeckeAlgebra::bar_restrict(const BernElt& h, Subset J) const {
  BernElt r;
  for (int u : aw_->W().min_coset_reps(J)) {
    auto parts = coset_normal_form(right_mul_T(h, u), J);
    auto it = parts.find(u);
    if (it != parts.end()) r = r + it->second;
  }
  return r;
}

// ------------------------------------------------------------------ rendering

std::string render(const HeckeElt& h, const AffineWeyl& aw) {
  if (h.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : h) {
    if (!out.empty()) out += " + ";
    out += render_coefficient(c) + "*T[" + aw.render(w) + "]";
  }
  return out;
}

std::string render(const BernElt& b, const AffineWeyl& aw) {
  if (b.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : b.terms) {
    if (!out.empty()) out += " + ";
    out += render_coefficient(c) + "*theta" + to_string(key.first) + "*T[" + aw.render(aw.finite(key.second)) + "]";
  }
  return out;
}

std::string render_coefficient(const LaurentPoly& c) {
  LaurentPoly p = c;
  try {
    p = render_in_q(c);
  } catch (const Error&) {
  }
  std::string s = to_compact_string(p);
  if (p.num_terms() > 1) return "(" + s + ")";
  return s;
}

HeckeElt class_element(const HeckeAlgebra& H, const ConjClassRecord& O) { return H.T(O.rep); }

// ------------------------------------------------------------------ cocenter

CocenterReducer::CocenterReducer(const HeckeAlgebra& H, const ClassList& classes, bool allow_adhoc,
                                 std::size_t budget)
    : H_(H), classes_(classes), allow_adhoc_(allow_adhoc), budget_(budget) {}

const std::map<std::string, LaurentPoly>& CocenterReducer::reduce_memo(const ExtAffElt& e) {
  auto hit = memo_.find(e);
  if (hit != memo_.end()) return hit->second;
  const AffineWeyl& aw = H_.weyl();
  const int len = aw.length(e);
  std::vector<ExtAffElt> plateau{e};
  std::set<ExtAffElt> seen{e};
  std::map<std::string, LaurentPoly> result;
  bool reduced = false;
  for (std::size_t head = 0; head < plateau.size() && !reduced; ++head) {
    const ExtAffElt p = plateau[head];
    for (std::size_t s = 0; s < aw.num_simples() && !reduced; ++s) {
      const ExtAffElt& se = aw.simple(static_cast<int>(s));
      ExtAffElt sp = aw.mul(se, p);
      ExtAffElt sps = aw.mul(sp, se);
      int l = aw.length(sps);
      if (l == len - 2) {
        // T_p = T_s T_{sp} == T_{sp} T_s = (Q_s - 1) T_{sp} + Q_s T_{sps}
        const LaurentPoly q = H_.Q(static_cast<int>(s));
        auto a = reduce_memo(sp);
        auto b = reduce_memo(sps);
        for (const auto& [k, c] : a) accumulate(result, k, (q - 1) * c);
        for (const auto& [k, c] : b) accumulate(result, k, q * c);
        reduced = true;
      } else if (l == len && seen.insert(sps).second) {
        if (++used_ > budget_) fail(ErrorKind::BudgetExceeded, "cocenter reduction exceeded its budget");
        plateau.push_back(sps);
      }
    }
    for (const auto& o : aw.omega()) {
      ExtAffElt c = aw.conj(o, p);
      if (seen.insert(c).second) plateau.push_back(c);
    }
  }
  if (!reduced) {
    int idx = -1;
    for (const auto& p : plateau) {
      idx = classes_.index_of_min(p);
      if (idx >= 0) break;
    }
    std::string label;
    if (idx >= 0) {
      label = classes_[idx].label;
      reps_[label] = classes_[idx].rep;
    } else {
      const ExtAffElt best =
          *std::min_element(plateau.begin(), plateau.end(),
                            [&](const ExtAffElt& a, const ExtAffElt& b) { return canonical_less(aw, a, b); });
      label = aw.render_word(best);
      if (!allow_adhoc_) {
        fail(ErrorKind::NonNewtonZeroLeaf, "reduction of " + aw.render(e) + " reached class [" + label +
                                               "] outside the class list");
      }
      adhoc_.insert(label);
      reps_[label] = best;
    }
    result[label] = LaurentPoly::constant(1, H_.vars());
  }
  return memo_.emplace(e, std::move(result)).first->second;
}

CocenterCombination CocenterReducer::reduce(const ExtAffElt& e) {
  CocenterCombination out;
  out.coeffs = reduce_memo(e);
  for (const auto& [k, c] : out.coeffs) {
    out.reps[k] = reps_.at(k);
    if (adhoc_.count(k)) out.adhoc.insert(k);
  }
  return out;
}

CocenterCombination CocenterReducer::reduce(const HeckeElt& h) {
  CocenterCombination out;
  for (const auto& [w, c] : h) {
    for (const auto& [k, d] : reduce_memo(w)) accumulate(out.coeffs, k, c * d);
  }
  for (const auto& [k, c] : out.coeffs) {
    out.reps[k] = reps_.at(k);
    if (adhoc_.count(k)) out.adhoc.insert(k);
  }
  return out;
}

std::string render(const CocenterCombination& c, const AffineWeyl& aw) {
  std::vector<std::pair<std::string, LaurentPoly>> terms(c.coeffs.begin(), c.coeffs.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int la = aw.length(c.reps.at(a.first)), lb = aw.length(c.reps.at(b.first));
    if (la != lb) return la > lb;
    return a.first < b.first;
  });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [label, coeff] : terms) {
    std::string cs = render_coefficient(coeff);
    if (out.empty()) {
      out = cs;
    } else if (cs[0] == '-') {
      out += " - " + cs.substr(1);
    } else {
      out += " + " + cs;
    }
    out += "*T[" + label + "]";
  }
  return out;
}

}  // namespace rigid
