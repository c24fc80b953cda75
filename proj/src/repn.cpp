#include "rigid/repn.hpp"

#include <algorithm>
#include <functional>

namespace rigid {

namespace {

IntVec unit(std::size_t m, std::size_t k, std::int64_t sign = 1) {
  IntVec e(m, 0);
  e[k] = sign;
  return e;
}

std::string simple_label(const AffineWeyl& aw, int s) { return "T" + aw.simples()[s].name.substr(1); }

PolyMatrix scalar_matrix(std::size_t n, const LaurentPoly& c) { return PolyMatrix::scalar(n, c); }

[[noreturn]] void relation_failed(const std::string& what, const PolyMatrix& residual) {
  std::string entry;
  for (std::size_t r = 0; r < residual.rows() && entry.empty(); ++r) {
    for (std::size_t c = 0; c < residual.cols() && entry.empty(); ++c) {
      if (!residual(r, c).is_zero()) {
        entry = "residual(" + std::to_string(r) + "," + std::to_string(c) + ") = " + to_string(residual(r, c));
      }
    }
  }
  fail(ErrorKind::RelationFailed, what + ": " + entry);
}

void expect_equal(const std::string& what, const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a == b)) relation_failed(what, a - b);
}

}  // namespace

// --------------------------------------------------------------- FinDimModule

FinDimModule::FinDimModule(HeckeAlgebraPtr H, ModuleData data) : H_(std::move(H)), data_(std::move(data)) {}

bool FinDimModule::full() const { return data_.level == H_->weyl().all(); }

PolyMatrix FinDimModule::theta(const IntVec& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = theta_cache_.find(x);
    if (it != theta_cache_.end()) return it->second;
  }
  PolyMatrix r = PolyMatrix::identity(data_.dim);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const PolyMatrix& g = x[k] >= 0 ? data_.theta.at(k) : data_.theta_inv.at(k);
    for (std::int64_t i = 0; i < std::abs(x[k]); ++i) r = r * g;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  theta_cache_.emplace(x, r);
  return r;
}

PolyMatrix FinDimModule::T_finite(int w) const {
  PolyMatrix r = PolyMatrix::identity(data_.dim);
  for (int i : H_->weyl().W().word(w)) r = r * data_.T.at(i);
  return r;
}

PolyMatrix FinDimModule::T_of(const ExtAffElt& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = T_cache_.find(w);
    if (it != T_cache_.end()) return it->second;
  }
  const auto& [simples, o] = H_->word(w);
  PolyMatrix r = PolyMatrix::identity(data_.dim);
  for (int s : simples) r = r * data_.T.at(s);
  if (o != 0) r = r * data_.omega.at(static_cast<std::size_t>(o));
  std::lock_guard<std::mutex> lock(mutex_);
  T_cache_.emplace(w, r);
  return r;
}

PolyMatrix FinDimModule::act(const BernElt& b) const {
  PolyMatrix r(data_.dim, data_.dim);
  for (const auto& [key, c] : b.terms) r += c * (theta(key.first) * T_finite(key.second));
  return r;
}

PolyMatrix FinDimModule::act(const HeckeElt& h) const {
  PolyMatrix r(data_.dim, data_.dim);
  for (const auto& [w, c] : h) r += c * T_of(w);
  return r;
}

LaurentPoly FinDimModule::trace(const BernElt& b) const {
  LaurentPoly r;
  for (const auto& [key, c] : b.terms) r += c * (theta(key.first) * T_finite(key.second)).trace();
  return r;
}

LaurentPoly FinDimModule::trace(const HeckeElt& h) const {
  LaurentPoly r;
  for (const auto& [w, c] : h) r += c * T_of(w).trace();
  return r;
}

// ------------------------------------------------------------- verification

std::vector<std::string> verify_relations(const FinDimModule& M) {
  const HeckeAlgebra& H = M.algebra();
  const AffineWeyl& aw = H.weyl();
  const auto& d = M.data();
  const std::size_t n = d.dim;
  const PolyMatrix I = PolyMatrix::identity(n);
  std::vector<std::string> done;

  for (const auto& [s, Ts] : d.T) {
    if (Ts.rows() != n || Ts.cols() != n) fail(ErrorKind::RelationFailed, "T matrix has the wrong size");
    PolyMatrix res = (Ts + I) * (Ts - H.Q(s) * I);
    if (!res.is_zero()) relation_failed("quadratic relation for " + aw.simples()[s].name, res);
  }
  done.push_back("quadratic");
  for (const auto& [s, Ts] : d.T) {
    for (const auto& [t, Tt] : d.T) {
      if (t <= s) continue;
      int m = aw.coxeter(s, t);
      if (m == 0) continue;
      PolyMatrix a = I, b = I;
      for (int k = 0; k < m; ++k) {
        a = a * (k % 2 == 0 ? Ts : Tt);
        b = b * (k % 2 == 0 ? Tt : Ts);
      }
      expect_equal("braid relation " + aw.simples()[s].name + "," + aw.simples()[t].name, a, b);
    }
  }
  done.push_back("braid");
  const std::size_t m = aw.m();
  for (std::size_t k = 0; k < m; ++k) {
    expect_equal("theta inverse " + std::to_string(k + 1), d.theta.at(k) * d.theta_inv.at(k), I);
    for (std::size_t l = k + 1; l < m; ++l) {
      expect_equal("theta commutation", d.theta[k] * d.theta[l], d.theta[l] * d.theta[k]);
    }
  }
  done.push_back("theta");
  std::vector<IntVec> probes;
  for (std::size_t k = 0; k < m; ++k) {
    probes.push_back(unit(m, k));
    probes.push_back(unit(m, k, -1));
    for (std::size_t l = k + 1; l < m; ++l) {
      probes.push_back(add(unit(m, k), unit(m, l)));
      probes.push_back(sub(unit(m, k), unit(m, l)));
    }
  }
  for (std::size_t i = 0; i < aw.rank(); ++i) {
    if (!contains(d.level, i)) continue;
    const PolyMatrix& Ti = d.T.at(static_cast<int>(i));
    for (const auto& x : probes) {
      IntVec sx = aw.W().act(aw.W().simple(i), x);
      BernElt c;
      for (const auto& [z, coeff] : H.bl_correction(i, x)) c.add(z, 0, coeff);
      expect_equal("Bernstein-Lusztig relation s" + std::to_string(i + 1) + " at " + to_string(x),
                   M.theta(x) * Ti - Ti * M.theta(sx), M.act(c));
    }
  }
  done.push_back("bernstein-lusztig");
  if (M.full()) {
    const std::size_t no = aw.omega().size();
    if (d.omega.size() != no) fail(ErrorKind::RelationFailed, "missing Omega matrices");
    expect_equal("Omega identity", d.omega[0], I);
    for (std::size_t a = 0; a < no; ++a) {
      for (std::size_t b = 0; b < no; ++b) {
        expect_equal("Omega product", d.omega[a] * d.omega[b],
                     d.omega[static_cast<std::size_t>(aw.omega_mul(static_cast<int>(a), static_cast<int>(b)))]);
      }
      for (std::size_t s = 0; s < aw.num_simples(); ++s) {
        int image = aw.omega_conj(static_cast<int>(a), static_cast<int>(s));
        expect_equal("Omega conjugation of " + aw.simples()[s].name, d.omega[a] * d.T.at(static_cast<int>(s)),
                     d.T.at(image) * d.omega[a]);
      }
    }
    done.push_back("omega");
  }
  return done;
}

ModulePtr certified(HeckeAlgebraPtr H, ModuleData data) {
  auto M = std::make_shared<FinDimModule>(std::move(H), std::move(data));
  verify_relations(*M);
  return M;
}

namespace {

// Non-owning handle for scratch modules built on an algebra the caller owns.
HeckeAlgebraPtr borrow(const HeckeAlgebra& H) { return HeckeAlgebraPtr(std::shared_ptr<void>(), &H); }

}  // namespace

void complete_affine(const HeckeAlgebra& H, ModuleData& data) {
  const AffineWeyl& aw = H.weyl();
  FinDimModule tmp(borrow(H), data);
  for (int s : aw.affine_indices()) data.T[s] = tmp.act(H.bern_of(aw.simple(s)));
  data.omega.clear();
  for (const auto& o : aw.omega()) data.omega.push_back(tmp.act(H.bern_of(o)));
}

void derive_theta_from_im(const HeckeAlgebra& H, ModuleData& data) {
  const AffineWeyl& aw = H.weyl();
  FinDimModule tmp(borrow(H), data);
  data.theta.clear();
  data.theta_inv.clear();
  for (std::size_t k = 0; k < aw.m(); ++k) {
    data.theta.push_back(tmp.act(H.theta_im(unit(aw.m(), k))));
    data.theta_inv.push_back(tmp.act(H.theta_im(unit(aw.m(), k, -1))));
  }
}

namespace {

void fill_signature(const HeckeAlgebra& H, ModuleData& data) {
  const AffineWeyl& aw = H.weyl();
  data.info.signature.clear();
  for (const auto& [s, Ts] : data.T) data.info.signature[simple_label(aw, s)] = Ts.trace();
  for (std::size_t o = 1; o < data.omega.size(); ++o) data.info.signature[aw.omega_names()[o]] = data.omega[o].trace();
}

// d-th root of a unit monomial c * v^e with c = +-1; all roots over Q.
std::vector<LaurentPoly> monomial_roots(const LaurentPoly& p, std::int64_t d, const VarTablePtr& vars) {
  if (!p.is_monomial()) return {};
  const Term& t = p.terms()[0];
  Exponents e{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (t.exps[i] % d != 0) return {};
    e[i] = static_cast<std::int32_t>(t.exps[i] / d);
  }
  std::vector<LaurentPoly> out;
  if (t.coeff == 1) {
    out.push_back(LaurentPoly::monomial(vars, e, 1));
    if (d % 2 == 0) out.push_back(LaurentPoly::monomial(vars, e, -1));
  } else if (t.coeff == -1 && d % 2 == 1) {
    out.push_back(LaurentPoly::monomial(vars, e, -1));
  }
  return out;
}

}  // namespace

std::vector<ModulePtr> one_dim_modules(HeckeAlgebraPtr H, Subset J, bool with_twist) {
  const AffineWeyl& aw = H->weyl();
  const std::size_t m = aw.m();
  const VarTablePtr& vars = H->vars();
  std::vector<int> idx;
  for (std::size_t i = 0; i < aw.rank(); ++i) {
    if (contains(J, i)) idx.push_back(static_cast<int>(i));
  }
  const std::size_t r = idx.size();
  std::vector<IntVec> cols;
  for (int i : idx) cols.push_back(aw.datum().simple_roots[i]);
  SmithForm f = smith_normal_form(columns_matrix(cols, m), m, r);
  const LaurentPoly one = LaurentPoly::constant(1, vars);

  // Candidate theta_{alpha_i} values per choice of T_i eigenvalue.
  struct Choice {
    LaurentPoly eps, t_alpha;
  };
  std::vector<std::vector<Choice>> per_root;
  for (int i : idx) {
    std::vector<Choice> ch;
    const LaurentPoly Q = H->Q(i);
    if (!aw.two_xvee(static_cast<std::size_t>(i))) {
      ch.push_back({Q, Q});
      ch.push_back({LaurentPoly(-1), Q.pow(-1)});
    } else {
      const LaurentPoly vs = H->v(i), vt = H->v(aw.tilde(static_cast<std::size_t>(i)));
      ch.push_back({Q, vs * vt});
      ch.push_back({Q, -(vs * vt.pow(-1))});
      ch.push_back({LaurentPoly(-1), (vs * vt).pow(-1)});
      ch.push_back({LaurentPoly(-1), -(vt * vs.pow(-1))});
    }
    per_root.push_back(ch);
  }
  std::vector<ModulePtr> out;
  std::vector<std::pair<std::map<int, PolyMatrix>, std::vector<PolyMatrix>>> seen;
  std::vector<std::size_t> pick(r, 0);
  while (true) {
    // theta on the Smith basis f_j = column j of U^{-1}: t(f_j)^{d_j} = prod_l t(alpha_l)^{V_lj}.
    std::vector<std::vector<LaurentPoly>> basis_values(m);
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      if (j < r) {
        LaurentPoly target = one;
        for (std::size_t l = 0; l < r; ++l) target *= per_root[l][pick[l]].t_alpha.pow(static_cast<int>(f.V[l][j]));
        basis_values[j] = monomial_roots(target, f.diag[j], vars);
        ok = !basis_values[j].empty();
      } else if (with_twist) {
        int z = H->twist_var(j - r);
        if (z < 0) fail(ErrorKind::InvalidArgument, "missing twist variable");
        basis_values[j] = {LaurentPoly::variable(vars, static_cast<std::size_t>(z))};
      } else {
        basis_values[j] = {one};
      }
    }
    if (ok) {
      std::vector<std::size_t> root_pick(m, 0);
      while (true) {
        ModuleData data;
        data.level = J;
        data.dim = 1;
        for (std::size_t l = 0; l < r; ++l) data.T[idx[l]] = scalar_matrix(1, per_root[l][pick[l]].eps * one);
        for (std::size_t k = 0; k < m; ++k) {
          LaurentPoly t = one;
          for (std::size_t j = 0; j < m; ++j) t *= basis_values[j][root_pick[j]].pow(static_cast<int>(f.U[j][k]));
          data.theta.push_back(scalar_matrix(1, t));
          data.theta_inv.push_back(scalar_matrix(1, t.pow(-1)));
        }
        if (J == aw.all()) complete_affine(*H, data);
        bool fresh = std::none_of(seen.begin(), seen.end(),
                                  [&](const auto& s) { return s.first == data.T && s.second == data.theta; });
        if (fresh) {
          seen.push_back({data.T, data.theta});
          fill_signature(*H, data);
          data.info.kind = "onedim";
          data.info.J = J;
          data.info.twist = (with_twist && r < m) ? "symbolic" : "trivial";
          auto M = std::make_shared<FinDimModule>(H, std::move(data));
          try {
            verify_relations(*M);
            out.push_back(M);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::RelationFailed) throw;
          }
        }
        std::size_t j = 0;
        while (j < m && ++root_pick[j] == basis_values[j].size()) root_pick[j++] = 0;
        if (j == m) break;
      }
    }
    std::size_t l = 0;
    while (l < r && ++pick[l] == per_root[l].size()) pick[l++] = 0;
    if (l == r) break;
  }
  return out;
}

ModulePtr lift_from_parahoric(HeckeAlgebraPtr H, const std::map<int, PolyMatrix>& finite_T,
                              const std::map<int, LaurentPoly>& scalars, const std::string& name,
                              const std::vector<LaurentPoly>& omega_scalars) {
  const AffineWeyl& aw = H->weyl();
  if (omega_scalars.size() + 1 != aw.omega().size()) {
    fail(ErrorKind::InvalidArgument, "one scalar is needed for each nontrivial element of Omega");
  }
  ModuleData data;
  data.level = aw.all();
  data.dim = finite_T.empty() ? 1 : finite_T.begin()->second.rows();
  for (std::size_t s = 0; s < aw.num_simples(); ++s) {
    const int si = static_cast<int>(s);
    auto it = finite_T.find(si);
    if (it != finite_T.end()) {
      data.T[si] = it->second;
    } else {
      auto sc = scalars.find(si);
      if (sc == scalars.end()) fail(ErrorKind::InvalidArgument, "no action given for " + aw.simples()[s].name);
      data.T[si] = PolyMatrix::scalar(data.dim, sc->second);
    }
  }
  data.omega = {PolyMatrix::identity(data.dim)};
  for (const auto& c : omega_scalars) data.omega.push_back(PolyMatrix::scalar(data.dim, c));
  derive_theta_from_im(*H, data);
  fill_signature(*H, data);
  data.info.kind = "lift";
  data.info.name = name;
  data.info.J = aw.all();
  return certified(std::move(H), std::move(data));
}

std::vector<FiniteIrrep> finite_c2_irreps(const LaurentPoly& Qa, const LaurentPoly& Qb) {
  auto s = [](const LaurentPoly& c) { return PolyMatrix::scalar(1, c); };
  std::vector<FiniteIrrep> out = {
      {"2x0", s(Qa), s(Qb)}, {"11x0", s(LaurentPoly(-1)), s(Qb)}, {"0x2", s(Qa), s(LaurentPoly(-1))},
      {"0x11", s(LaurentPoly(-1)), s(LaurentPoly(-1))}};
  PolyMatrix Ta(2, 2), Tb(2, 2);
  Ta(0, 0) = -1;
  Ta(1, 0) = 1;
  Ta(1, 1) = Qa;
  Tb(0, 0) = Qb;
  Tb(0, 1) = Qa + Qb;
  Tb(1, 1) = -1;
  out.push_back({"1x1", Ta, Tb});
  return out;
}

// ---------------------------------------------------------------- quotients

QuotientAlgebra quotient_algebra(const HeckeAlgebraPtr& H, Subset J) {
  const AffineWeyl& aw = H->weyl();
  QuotientAlgebra qa;
  qa.q = semisimple_quotient(aw.datum(), J);
  auto qw = std::make_shared<AffineWeyl>(qa.q.datum);
  std::vector<int> sv(qw->num_simples(), -1);
  for (std::size_t s = 0; s < qw->num_simples(); ++s) {
    const AffineSimple& sim = qw->simples()[s];
    if (sim.finite) {
      sv[s] = H->simple_var(qa.q.ambient_index[static_cast<std::size_t>(sim.finite_index)]);
      continue;
    }
    for (std::size_t j = 0; j < qw->rank(); ++j) {
      if (qw->roots().component_of(static_cast<int>(j)) != sim.component || !qw->two_xvee(j)) continue;
      const int i = qa.q.ambient_index[j];
      sv[s] = aw.two_xvee(static_cast<std::size_t>(i)) ? H->simple_var(aw.tilde(static_cast<std::size_t>(i)))
                                                       : H->simple_var(i);
    }
    if (sv[s] >= 0) continue;
    for (int t : qw->orbits()[static_cast<std::size_t>(qw->orbit_of(static_cast<int>(s)))].members) {
      if (qw->simples()[t].finite) sv[s] = H->simple_var(qa.q.ambient_index[qw->simples()[t].finite_index]);
    }
    if (sv[s] >= 0) continue;
    for (std::size_t j = 0; j < qw->rank() && sv[s] < 0; ++j) {
      if (qw->roots().component_of(static_cast<int>(j)) == sim.component) sv[s] = H->simple_var(qa.q.ambient_index[j]);
    }
  }
  qa.H = std::make_shared<HeckeAlgebra>(qw, H->vars(), sv);
  return qa;
}

std::vector<LaurentPoly> symbolic_twist(const HeckeAlgebra& H, Subset J) {
  std::vector<LaurentPoly> out;
  const std::size_t free = H.weyl().m() - subset_size(J);
  for (std::size_t j = 0; j < free; ++j) {
    int z = H.twist_var(j);
    if (z < 0) fail(ErrorKind::InvalidArgument, "missing twist variable");
    out.push_back(LaurentPoly::variable(H.vars(), static_cast<std::size_t>(z)));
  }
  return out;
}

ModulePtr inflate(const HeckeAlgebraPtr& H, Subset J, const QuotientAlgebra& qa, const FinDimModule& sigma,
                  const std::vector<LaurentPoly>& twist) {
  const AffineWeyl& aw = H->weyl();
  const std::size_t m = aw.m();
  IntMat C = cotwist_coordinates(aw.datum(), J);
  if (!twist.empty() && twist.size() != C.size()) fail(ErrorKind::InvalidArgument, "twist has the wrong length");
  ModuleData data;
  data.level = J;
  data.dim = sigma.dim();
  for (std::size_t j = 0; j < qa.q.ambient_index.size(); ++j) {
    data.T[qa.q.ambient_index[j]] = sigma.T(static_cast<int>(j));
  }
  for (std::size_t k = 0; k < m; ++k) {
    LaurentPoly t = LaurentPoly::constant(1, H->vars());
    for (std::size_t j = 0; j < C.size() && !twist.empty(); ++j) t *= twist[j].pow(static_cast<int>(C[j][k]));
    IntVec xq = rigid::apply(qa.q.to_quotient, unit(m, k));
    data.theta.push_back(t * sigma.theta(xq));
    data.theta_inv.push_back(t.pow(-1) * sigma.theta(neg(xq)));
  }
  data.info = sigma.info();
  data.info.kind = "inflated";
  data.info.J = J;
  bool symbolic = false;
  for (const auto& t : twist) symbolic = symbolic || t.involves_kind(VarKind::Twist);
  data.info.twist = symbolic ? "symbolic" : "trivial";
  return certified(H, std::move(data));
}

// ------------------------------------------------------ induction and twists

ModulePtr induce(const FinDimModule& sigma, Subset K) {
  const HeckeAlgebra& H = sigma.algebra();
  const AffineWeyl& aw = H.weyl();
  const auto& W = aw.W();
  const Subset J = sigma.level();
  if ((J & K) != J) fail(ErrorKind::InvalidArgument, "induction needs J inside K");
  std::vector<int> reps;
  for (int u : W.min_coset_reps(J)) {
    if (W.in_parabolic(u, K)) reps.push_back(u);
  }
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = i;
  const std::size_t d = sigma.dim();
  const std::size_t n = reps.size() * d;
  auto action = [&](const BernElt& g) {
    PolyMatrix M(n, n);
    for (std::size_t col = 0; col < reps.size(); ++col) {
      TLeftElt tl = H.to_tleft(H.bern_mul(g, H.bern_T_finite(reps[col])));
      for (const auto& [key, c] : tl.terms) {
        auto [u, wj] = W.coset_factor(key.second, J);
        auto it = pos.find(u);
        if (it == pos.end()) fail(ErrorKind::InvalidArgument, "coset representative outside W_K");
        M.add_block(it->second * d, col * d, c * (sigma.T_finite(wj) * sigma.theta(key.first)));
      }
    }
    return M;
  };
  ModuleData data;
  data.level = K;
  data.dim = n;
  for (std::size_t i = 0; i < aw.rank(); ++i) {
    if (contains(K, i)) data.T[static_cast<int>(i)] = action(H.bern_T_finite(W.simple(i)));
  }
  for (std::size_t k = 0; k < aw.m(); ++k) {
    data.theta.push_back(action(H.theta(unit(aw.m(), k))));
    data.theta_inv.push_back(action(H.theta(unit(aw.m(), k, -1))));
  }
  if (K == aw.all()) complete_affine(H, data);
  fill_signature(H, data);
  data.info.kind = "induced";
  data.info.J = J;
  data.info.twist = sigma.info().twist;
  data.info.name = "i_" + subset_name(J) + "(" + sigma.info().name + ")";
  return certified(sigma.algebra_ptr(), std::move(data));
}

ModulePtr restrict_to(const FinDimModule& M, Subset K) {
  if ((K & M.level()) != K) fail(ErrorKind::InvalidArgument, "restriction needs K inside the module level");
  const AffineWeyl& aw = M.algebra().weyl();
  ModuleData data;
  data.level = K;
  data.dim = M.dim();
  for (std::size_t i = 0; i < aw.rank(); ++i) {
    if (contains(K, i)) data.T[static_cast<int>(i)] = M.T(static_cast<int>(i));
  }
  data.theta = M.data().theta;
  data.theta_inv = M.data().theta_inv;
  if (K == aw.all()) {
    data.T = M.data().T;
    data.omega = M.data().omega;
  }
  data.info = M.info();
  data.info.kind = "restricted";
  return certified(M.algebra_ptr(), std::move(data));
}

ModulePtr twist_by(const FinDimModule& sigma, int w) {
  const AffineWeyl& aw = sigma.algebra().weyl();
  const auto& W = aw.W();
  if (sigma.full()) {
    if (w != 0) fail(ErrorKind::InvalidArgument, "full-level modules only twist by the identity");
    return std::make_shared<FinDimModule>(sigma.algebra_ptr(), sigma.data());
  }
  auto K = W.image_subset(w, sigma.level());
  if (!K) fail(ErrorKind::InvalidArgument, "w does not map J onto simple roots");
  ModuleData data;
  data.level = *K;
  data.dim = sigma.dim();
  for (std::size_t j = 0; j < aw.rank(); ++j) {
    if (contains(sigma.level(), j)) data.T[W.simple_image(w, j)] = sigma.T(static_cast<int>(j));
  }
  const int winv = W.inv(w);
  for (std::size_t k = 0; k < aw.m(); ++k) {
    IntVec x = W.act(winv, unit(aw.m(), k));
    data.theta.push_back(sigma.theta(x));
    data.theta_inv.push_back(sigma.theta(neg(x)));
  }
  data.info = sigma.info();
  data.info.kind = "twisted";
  return certified(sigma.algebra_ptr(), std::move(data));
}

LaurentPoly VirtualModule::trace(const BernElt& b) const {
  LaurentPoly r;
  for (const auto& [c, M] : terms) r += LaurentPoly(c) * M->trace(b);
  return r;
}

// ------------------------------------------------------------------ A-operator

std::size_t normalizer_size(const FinWeylGroup& W, Subset K) {
  std::size_t n = 0;
  for (int z : W.double_coset_reps(K, K)) {
    auto image = W.image_subset(z, K);
    if (image && *image == K) ++n;
  }
  return n;
}

BernElt a_adjoint(const HeckeAlgebra& H, const BernElt& h, bool reverse_order) {
  const AffineWeyl& aw = H.weyl();
  const std::size_t n = aw.rank();
  BernElt cur = h;
  // A = A_n o ... o A_1 with A_l = prod_{|K| = n - l} (i_K r_K - |N_K|); adjoints apply A_n first.
  for (std::size_t l = n; l >= 1; --l) {
    std::vector<Subset> Ks;
    for (Subset K = 0; K < (1U << n); ++K) {
      if (subset_size(K) == n - l) Ks.push_back(K);
    }
    if (reverse_order) std::reverse(Ks.begin(), Ks.end());
    for (Subset K : Ks) {
      const LaurentPoly nk(static_cast<long>(normalizer_size(aw.W(), K)));
      cur = H.bar_restrict(cur, K) - nk * cur;
    }
  }
  return cur;
}

LaurentPoly a_trace(const FinDimModule& M, const BernElt& h) { return M.trace(a_adjoint(M.algebra(), h)); }

}  // namespace rigid
