#include "rigid/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace rigid {

namespace {

IntMat reflection_matrix(const IntVec& a, const IntVec& c) {
  const std::size_t m = a.size();
  IntMat r = identity_mat(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) r[i][j] -= a[i] * c[j];
  }
  return r;
}

}  // namespace

// ------------------------------------------------------------- FinWeylGroup

FinWeylGroup::FinWeylGroup(const BasedRootDatum& d, const RootSystem& rs, std::size_t bound) : rs_(&rs) {
  const std::size_t k = d.rank();
  std::vector<IntMat> gens, dual_gens;
  for (std::size_t i = 0; i < k; ++i) {
    gens.push_back(reflection_matrix(d.simple_roots[i], d.simple_coroots[i]));
    dual_gens.push_back(reflection_matrix(d.simple_coroots[i], d.simple_roots[i]));
  }
  mats_.push_back(identity_mat(d.m));
  dual_.push_back(identity_mat(d.m));
  index_[mats_[0]] = 0;
  for (std::size_t head = 0; head < mats_.size(); ++head) {
    for (std::size_t i = 0; i < k; ++i) {
      IntMat next = mat_mul(mats_[head], gens[i]);
      if (index_.count(next)) continue;
      index_[next] = static_cast<int>(mats_.size());
      mats_.push_back(next);
      dual_.push_back(mat_mul(dual_[head], dual_gens[i]));
      if (mats_.size() > bound) {
        fail(ErrorKind::InfiniteWeylGroup, "Weyl group closure exceeded " + std::to_string(bound) + " elements");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) simple_.push_back(index_.at(gens[i]));

  std::map<IntVec, int> root_index;
  for (std::size_t b = 0; b < rs.roots.size(); ++b) root_index[rs.roots[b]] = static_cast<int>(b);
  const std::size_t n = mats_.size();
  len_.assign(n, 0);
  neg_simple_.assign(n, std::vector<int>(k, 0));
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
      if (!rs.positive[b]) continue;
      int image = root_index.at(rigid::apply(mats_[w], rs.roots[b]));
      if (!rs.positive[image]) ++len_[w];
    }
    for (std::size_t i = 0; i < k; ++i) {
      neg_simple_[w][i] = !rs.positive[root_index.at(rigid::apply(mats_[w], d.simple_roots[i]))];
    }
  }
  inv_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) inv_[w] = index_.at(transpose(dual_[w], d.m));
  if (n <= 4096) {
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(mat_mul(mats_[a], mats_[b]));
    }
  }
  std::vector<int> by_length(n);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  words_.assign(n, {});
  for (int w : by_length) {
    if (w == 0) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (has_left_descent(w, i)) {
        words_[w] = {static_cast<int>(i)};
        const auto& rest = words_[mul(simple_[i], w)];
        words_[w].insert(words_[w].end(), rest.begin(), rest.end());
        break;
      }
    }
  }
  order_.assign(n, 1);
  for (std::size_t w = 0; w < n; ++w) {
    int p = static_cast<int>(w);
    while (p != 0) {
      p = mul(p, static_cast<int>(w));
      ++order_[w];
    }
  }
  for (std::size_t b = 0; b < rs.roots.size(); ++b) {
    reflections_.push_back(index_.at(reflection_matrix(rs.roots[b], rs.coroots[b])));
  }
}

RatVec FinWeylGroup::act(int w, const RatVec& x) const {
  const IntMat& m = mats_[w];
  RatVec r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += Rational(m[i][j]) * x[j];
  }
  return r;
}

int FinWeylGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * mats_.size() + static_cast<std::size_t>(b)];
  return index_.at(mat_mul(mats_[a], mats_[b]));
}

int FinWeylGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) w = mul(w, simple_[i]);
  return w;
}

int FinWeylGroup::find(const IntMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

bool FinWeylGroup::has_right_descent(int w, std::size_t i) const { return neg_simple_[w][i]; }

bool FinWeylGroup::has_left_descent(int w, std::size_t i) const { return neg_simple_[inv_[w]][i]; }

bool FinWeylGroup::in_parabolic(int w, Subset J) const {
  for (int i : words_[w]) {
    if (!contains(J, static_cast<std::size_t>(i))) return false;
  }
  return true;
}

std::vector<int> FinWeylGroup::min_coset_reps(Subset J) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < size(); ++w) {
    bool ok = true;
    for (std::size_t i = 0; i < rank() && ok; ++i) {
      if (contains(J, i) && has_right_descent(static_cast<int>(w), i)) ok = false;
    }
    if (ok) out.push_back(static_cast<int>(w));
  }
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  return out;
}

std::pair<int, int> FinWeylGroup::coset_factor(int w, Subset J) const {
  int u = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (contains(J, i) && has_right_descent(u, i)) {
        u = mul(u, simple_[i]);
        changed = true;
      }
    }
  }
  return {u, mul(inv_[u], w)};
}

std::vector<int> FinWeylGroup::double_coset_reps(Subset K, Subset J) const {
  std::vector<int> out;
  for (int w : min_coset_reps(J)) {
    bool ok = true;
    for (std::size_t i = 0; i < rank() && ok; ++i) {
      if (contains(K, i) && has_left_descent(w, i)) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

int FinWeylGroup::simple_image(int w, std::size_t j) const {
  IntVec image = rigid::apply(mats_[w], rs_->roots[rs_->simple_index[j]]);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (rs_->roots[rs_->simple_index[i]] == image) return static_cast<int>(i);
  }
  return -1;
}

std::pair<Subset, Subset> FinWeylGroup::double_coset_subsets(int w, Subset K, Subset J) const {
  Subset Jw = 0, Kw = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (!contains(J, j)) continue;
    int i = simple_image(w, j);
    if (i >= 0 && contains(K, static_cast<std::size_t>(i))) {
      Jw |= 1U << j;
      Kw |= 1U << i;
    }
  }
  return {Jw, Kw};
}

std::optional<Subset> FinWeylGroup::image_subset(int w, Subset J) const {
  Subset out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (!contains(J, j)) continue;
    int i = simple_image(w, j);
    if (i < 0) return std::nullopt;
    out |= 1U << i;
  }
  return out;
}

std::vector<int> FinWeylGroup::parabolic_elements(Subset J) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < size(); ++w) {
    if (in_parabolic(static_cast<int>(w), J)) out.push_back(static_cast<int>(w));
  }
  return out;
}

// --------------------------------------------------------------- AffineWeyl

bool NewtonPoint::is_zero() const {
  return std::all_of(nu.begin(), nu.end(), [](const Rational& r) { return r == 0; });
}

AffineWeyl::AffineWeyl(BasedRootDatum d) : datum_(std::move(d)) {
  roots_ = generate_root_system(datum_);
  W_ = std::make_unique<FinWeylGroup>(datum_, roots_);
  if (rank_int(columns_matrix(datum_.simple_roots, datum_.m)) != datum_.m) {
    fail(ErrorKind::InvalidArgument, "datum '" + datum_.name + "' is not semisimple (Omega would be infinite)");
  }
  for (std::size_t b = 0; b < roots_.roots.size(); ++b) {
    if (roots_.positive[b]) positive_coroots_.push_back(static_cast<int>(b));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    IntMat s = W_->matrix(W_->simple(i));
    for (std::size_t r = 0; r < m(); ++r) s[r][r] -= 1;
    invariant_rank_mat_.insert(invariant_rank_mat_.end(), s.begin(), s.end());
  }
  build_affine_simples();
  build_omega();
  build_orbits();
}

ExtAffElt AffineWeyl::mul(const ExtAffElt& a, const ExtAffElt& b) const {
  return {add(a.x, W_->act(a.w, b.x)), W_->mul(a.w, b.w)};
}

ExtAffElt AffineWeyl::inv(const ExtAffElt& a) const {
  int wi = W_->inv(a.w);
  return {neg(W_->act(wi, a.x)), wi};
}

ExtAffElt AffineWeyl::pow(const ExtAffElt& a, long n) const {
  ExtAffElt base = n < 0 ? inv(a) : a;
  ExtAffElt r = identity();
  for (long i = 0; i < std::labs(n); ++i) r = mul(r, base);
  return r;
}

int AffineWeyl::length(const ExtAffElt& e) const {
  // Affine root (b^vee, k) is y -> <y, b^vee> + k; t_x w sends it to
  // (w b^vee, k - <x, w b^vee>). Count positive roots made negative.
  std::int64_t bound = 0;
  for (std::size_t b = 0; b < roots_.coroots.size(); ++b) bound = std::max(bound, std::abs(dot(e.x, roots_.coroots[b])));
  bound += 1;
  int count = 0;
  for (std::size_t b = 0; b < roots_.roots.size(); ++b) {
    IntVec wc = W_->act_dual(e.w, roots_.coroots[b]);
    int wb = roots_.find_coroot(wc);
    const bool image_positive = roots_.positive[wb];
    const std::int64_t shift = dot(e.x, wc);
    for (std::int64_t k = roots_.positive[b] ? 0 : 1; k <= bound; ++k) {
      std::int64_t k2 = k - shift;
      if (k2 < 0 || (k2 == 0 && !image_positive)) ++count;
    }
  }
  return count;
}

void AffineWeyl::build_affine_simples() {
  for (std::size_t i = 0; i < rank(); ++i) {
    AffineSimple s;
    s.elt = finite(W_->simple(i));
    s.name = "s" + std::to_string(i + 1);
    s.finite_index = static_cast<int>(i);
    s.component = roots_.component_of(static_cast<int>(i));
    simples_.push_back(s);
  }
  for (std::size_t c = 0; c < roots_.components.size(); ++c) {
    const auto& comp = roots_.components[c];
    int best = -1;
    Rational best_sum;
    for (std::size_t b = 0; b < roots_.roots.size(); ++b) {
      const RatVec& cc = roots_.coroot_coords[b];
      bool inside = true;
      Rational sum = 0;
      for (std::size_t i = 0; i < rank(); ++i) {
        bool in_comp = std::find(comp.begin(), comp.end(), static_cast<int>(i)) != comp.end();
        if (!in_comp && cc[i] != 0) inside = false;
        sum += cc[i];
      }
      if (inside && (best < 0 || sum < best_sum)) {
        best = static_cast<int>(b);
        best_sum = sum;
      }
    }
    AffineSimple s;
    s.finite = false;
    s.component = static_cast<int>(c);
    s.gamma_root = best;
    s.elt = {neg(roots_.roots[best]), W_->reflection(best)};
    s.name = roots_.components.size() == 1 ? "s0" : "s0_" + std::to_string(c + 1);
    if (length(s.elt) != 1) {
      fail(ErrorKind::InvalidArgument, "affine simple reflection " + s.name + " has length " +
                                           std::to_string(length(s.elt)));
    }
    affine_indices_.push_back(static_cast<int>(simples_.size()));
    simples_.push_back(s);
  }
  name_order_.resize(simples_.size());
  std::iota(name_order_.begin(), name_order_.end(), 0);
  std::sort(name_order_.begin(), name_order_.end(),
            [&](int a, int b) { return simples_[a].name < simples_[b].name; });
}

void AffineWeyl::build_omega() {
  const std::size_t k = rank();
  SmithForm f = smith_normal_form(columns_matrix(datum_.simple_roots, m()), m(), k);
  std::int64_t index = 1;
  for (auto d : f.diag) index *= d;
  // Coset representatives U^{-1} c with 0 <= c_i < d_i bound the search box.
  std::int64_t box = 0;
  std::vector<IntVec> reps = {IntVec(m(), 0)};
  for (std::size_t i = 0; i < m(); ++i) {
    std::vector<IntVec> next;
    for (const auto& r : reps) {
      for (std::int64_t c = 0; c < f.diag[i]; ++c) {
        IntVec v = r;
        v[i] = c;
        next.push_back(v);
      }
    }
    reps = next;
  }
  for (const auto& c : reps) {
    auto x = solve_integer(f.U, m(), c);
    for (auto v : *x) box = std::max(box, std::abs(v));
  }
  box += 2;
  auto coset_key = [&](const IntVec& x) {
    IntVec ux = rigid::apply(f.U, x);
    for (std::size_t i = 0; i < m(); ++i) ux[i] = ((ux[i] % f.diag[i]) + f.diag[i]) % f.diag[i];
    return ux;
  };
  std::map<IntVec, ExtAffElt> found;
  IntVec x(m(), -box);
  while (true) {
    for (std::size_t w = 0; w < W_->size(); ++w) {
      ExtAffElt e{x, static_cast<int>(w)};
      if (length(e) == 0) {
        auto key = coset_key(x);
        auto it = found.find(key);
        if (it != found.end() && it->second != e) {
          fail(ErrorKind::InvalidArgument, "two length-zero elements in one coset of X/Q");
        }
        found.emplace(key, e);
      }
    }
    std::size_t i = 0;
    while (i < m() && x[i] == box) x[i++] = -box;
    if (i == m()) break;
    ++x[i];
  }
  if (static_cast<std::int64_t>(found.size()) != index) {
    fail(ErrorKind::OmegaSearchExhausted, "found " + std::to_string(found.size()) + " of " + std::to_string(index) +
                                              " length-zero elements within box " + std::to_string(box));
  }
  for (auto& [key, e] : found) omega_.push_back(e);
  std::sort(omega_.begin(), omega_.end(), [&](const ExtAffElt& a, const ExtAffElt& b) {
    if ((a == identity()) != (b == identity())) return a == identity();
    return a < b;
  });
  for (std::size_t o = 0; o < omega_.size(); ++o) {
    if (o == 0) {
      omega_names_.push_back("1");
    } else {
      omega_names_.push_back(omega_.size() == 2 ? "tau" : "tau" + std::to_string(o));
    }
  }
  const std::size_t n = omega_.size();
  omega_mul_.assign(n, std::vector<int>(n, -1));
  omega_inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) omega_mul_[a][b] = find_omega(mul(omega_[a], omega_[b]));
    omega_inv_[a] = find_omega(inv(omega_[a]));
  }
  omega_perm_.assign(n, std::vector<int>(simples_.size(), -1));
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t s = 0; s < simples_.size(); ++s) {
      ExtAffElt c = conj(omega_[o], simples_[s].elt);
      for (std::size_t t = 0; t < simples_.size(); ++t) {
        if (simples_[t].elt == c) omega_perm_[o][s] = static_cast<int>(t);
      }
      if (omega_perm_[o][s] < 0) {
        fail(ErrorKind::InvalidArgument, "Omega does not normalize the affine simple reflections");
      }
    }
  }
}

int AffineWeyl::find_omega(const ExtAffElt& e) const {
  for (std::size_t o = 0; o < omega_.size(); ++o) {
    if (omega_[o] == e) return static_cast<int>(o);
  }
  return -1;
}

void AffineWeyl::build_orbits() {
  const std::size_t n = simples_.size();
  coxeter_.assign(n, std::vector<int>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      ExtAffElt st = mul(simples_[s].elt, simples_[t].elt);
      ExtAffElt p = st;
      for (int k = 1; k <= 12; ++k) {
        if (p == identity()) {
          coxeter_[s][t] = k;
          break;
        }
        p = mul(p, st);
      }
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root_of = [&](int x) { return parent[x] == x ? x : parent[x] = root_of(parent[x]); };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && coxeter_[s][t] % 2 == 1) parent[root_of(static_cast<int>(s))] = root_of(static_cast<int>(t));
    }
    for (std::size_t o = 0; o < omega_.size(); ++o) {
      parent[root_of(static_cast<int>(s))] = root_of(omega_perm_[o][s]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t s = 0; s < n; ++s) groups[root_of(static_cast<int>(s))].push_back(static_cast<int>(s));
  for (auto& [r, members] : groups) {
    ParamOrbit orbit;
    orbit.members = members;
    int best_finite = -1;
    for (int s : members) {
      if (simples_[s].finite && (best_finite < 0 || simples_[s].finite_index < best_finite)) {
        best_finite = simples_[s].finite_index;
      }
    }
    if (best_finite >= 0) {
      orbit.name = std::to_string(best_finite + 1);
    } else {
      orbit.name = simples_[members.front()].name.substr(1);
    }
    orbits_.push_back(orbit);
  }
  std::sort(orbits_.begin(), orbits_.end(), [](const ParamOrbit& a, const ParamOrbit& b) { return a.name < b.name; });
  if (!datum_.param_orbit_names.empty()) {
    if (datum_.param_orbit_names.size() != orbits_.size()) {
      fail(ErrorKind::InvalidArgument, "param_orbit_names has " + std::to_string(datum_.param_orbit_names.size()) +
                                           " entries but the datum has " + std::to_string(orbits_.size()) + " orbits");
    }
    for (std::size_t i = 0; i < orbits_.size(); ++i) orbits_[i].name = datum_.param_orbit_names[i];
  }
  orbit_of_.assign(n, -1);
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    for (int s : orbits_[o].members) orbit_of_[s] = static_cast<int>(o);
  }
  flags_.assign(rank(), false);
  tilde_.assign(rank(), -1);
  for (std::size_t i = 0; i < rank(); ++i) {
    flags_[i] = std::all_of(datum_.simple_coroots[i].begin(), datum_.simple_coroots[i].end(),
                            [](std::int64_t c) { return c % 2 == 0; });
    int comp = roots_.component_of(static_cast<int>(i));
    for (int a : affine_indices_) {
      if (simples_[a].component == comp) tilde_[i] = a;
    }
  }
}

std::pair<std::vector<int>, int> AffineWeyl::reduced_word(const ExtAffElt& e0) const {
  std::vector<int> word;
  ExtAffElt e = e0;
  int len = length(e);
  while (len > 0) {
    bool moved = false;
    for (int s : name_order_) {
      ExtAffElt next = mul(simples_[s].elt, e);
      int l2 = length(next);
      if (l2 < len) {
        word.push_back(s);
        e = next;
        len = l2;
        moved = true;
        break;
      }
    }
    if (!moved) fail(ErrorKind::InvalidArgument, "no descent found for " + render(e));
  }
  int o = find_omega(e);
  if (o < 0) fail(ErrorKind::InvalidArgument, "length-zero element outside Omega: " + render(e));
  return {word, o};
}

ExtAffElt AffineWeyl::from_word(const std::vector<int>& word, int omega_index) const {
  ExtAffElt e = identity();
  for (int s : word) e = mul(e, simples_[s].elt);
  return mul(e, omega_[omega_index]);
}

ExtAffElt AffineWeyl::parse_word(const std::string& text) const {
  ExtAffElt e = identity();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty() && tok != "1") {
      bool matched = false;
      for (const auto& s : simples_) {
        if (s.name == tok) {
          e = mul(e, s.elt);
          matched = true;
        }
      }
      for (std::size_t o = 1; o < omega_.size() && !matched; ++o) {
        if (omega_names_[o] == tok) {
          e = mul(e, omega_[o]);
          matched = true;
        }
      }
      if (!matched) fail(ErrorKind::InvalidArgument, "unknown generator '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return e;
}

std::string AffineWeyl::render(const ExtAffElt& e) const {
  std::string out = "t" + to_string(e.x) + "*";
  const auto& word = W_->word(e.w);
  if (word.empty()) return out + "1";
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

std::string AffineWeyl::render_word(const ExtAffElt& e) const {
  auto [word, o] = reduced_word(e);
  std::string out;
  for (int s : word) out += simples_[s].name;
  if (o != 0) out += omega_names_[o];
  return out.empty() ? "1" : out;
}

bool AffineWeyl::is_dominant(const IntVec& x) const {
  for (const auto& c : datum_.simple_coroots) {
    if (dot(x, c) < 0) return false;
  }
  return true;
}

IntVec AffineWeyl::dominant(const IntVec& x0) const {
  IntVec x = x0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (dot(x, datum_.simple_coroots[i]) < 0) {
        x = W_->act(W_->simple(i), x);
        changed = true;
      }
    }
  }
  return x;
}

RatVec AffineWeyl::dominant(const RatVec& x0) const {
  RatVec x = x0;
  auto pair = [&](const RatVec& v, std::size_t i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m(); ++j) s += v[j] * Rational(datum_.simple_coroots[i][j]);
    return s;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (pair(x, i) < 0) {
        x = W_->act(W_->simple(i), x);
        changed = true;
      }
    }
  }
  return x;
}

IntVec AffineWeyl::newton_lambda(const ExtAffElt& e) const {
  const int n = W_->order(e.w);
  IntVec lambda(m(), 0);
  IntVec term = e.x;
  for (int i = 0; i < n; ++i) {
    lambda = add(lambda, term);
    term = W_->act(e.w, term);
  }
  return lambda;
}

NewtonPoint AffineWeyl::newton_point(const ExtAffElt& e) const {
  const int n = W_->order(e.w);
  IntVec lambda = newton_lambda(e);
  RatVec nu(m());
  for (std::size_t i = 0; i < m(); ++i) nu[i] = Rational(lambda[i], n);
  for (auto& r : nu) r.canonicalize();
  NewtonPoint p;
  p.nu = dominant(nu);
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m(); ++j) s += p.nu[j] * Rational(datum_.simple_coroots[i][j]);
    if (s == 0) p.J |= 1U << i;
  }
  return p;
}

bool AffineWeyl::is_elliptic(const ExtAffElt& e) const {
  IntMat w = W_->matrix(e.w);
  for (std::size_t r = 0; r < m(); ++r) w[r][r] -= 1;
  std::size_t fixed_dim = m() - rank_int(w);
  std::size_t invariant_dim = m() - (invariant_rank_mat_.empty() ? 0 : rank_int(invariant_rank_mat_));
  return fixed_dim == invariant_dim;
}

std::vector<ExtAffElt> AffineWeyl::ball(int L) const {
  std::vector<std::vector<ExtAffElt>> levels(1, omega_);
  for (int k = 0; k < L; ++k) {
    std::set<ExtAffElt> next;
    for (const auto& e : levels[k]) {
      for (const auto& s : simples_) {
        ExtAffElt f = mul(e, s.elt);
        if (next.count(f) || length(f) != k + 1) continue;
        for (const auto& o : omega_) next.insert(mul(f, o));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  std::vector<ExtAffElt> out;
  for (auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::map<ExtAffElt, int> AffineWeyl::bfs_lengths(int L) const {
  std::map<ExtAffElt, int> dist;
  std::deque<ExtAffElt> queue;
  dist[identity()] = 0;
  queue.push_back(identity());
  while (!queue.empty()) {
    ExtAffElt e = queue.front();
    queue.pop_front();
    int d = dist[e];
    for (const auto& o : omega_) {
      ExtAffElt f = mul(e, o);
      auto it = dist.find(f);
      if (it == dist.end() || it->second > d) {
        dist[f] = d;
        queue.push_front(f);
      }
    }
    if (d == L) continue;
    for (const auto& s : simples_) {
      ExtAffElt f = mul(e, s.elt);
      auto it = dist.find(f);
      if (it == dist.end() || it->second > d + 1) {
        dist[f] = d + 1;
        queue.push_back(f);
      }
    }
  }
  return dist;
}

std::size_t validate_datum(const BasedRootDatum& d, std::size_t weyl_bound) {
  RootSystem rs = generate_root_system(d);
  FinWeylGroup W(d, rs, weyl_bound);
  return W.size();
}

}  // namespace rigid
