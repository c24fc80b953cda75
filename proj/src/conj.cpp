#include "rigid/conj.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace rigid {

namespace {

struct Neighbor {
  ExtAffElt elt;
  std::string via;
};

std::vector<Neighbor> conjugation_neighbors(const AffineWeyl& aw, const ExtAffElt& e) {
  std::vector<Neighbor> out;
  for (const auto& s : aw.simples()) out.push_back({aw.conj(s.elt, e), s.name});
  for (std::size_t o = 1; o < aw.omega().size(); ++o) out.push_back({aw.conj(aw.omega()[o], e), aw.omega_names()[o]});
  return out;
}

}  // namespace

bool canonical_less(const AffineWeyl& aw, const ExtAffElt& a, const ExtAffElt& b) {
  int la = aw.length(a), lb = aw.length(b);
  if (la != lb) return la < lb;
  auto affine_count = [&](const ExtAffElt& e) {
    auto word = aw.reduced_word(e).first;
    return std::count_if(word.begin(), word.end(), [&](int s) { return !aw.simples()[s].finite; });
  };
  auto ca = affine_count(a), cb = affine_count(b);
  if (ca != cb) return ca < cb;
  std::string wa = aw.render_word(a), wb = aw.render_word(b);
  if (wa != wb) return wa < wb;
  return a < b;
}


Descent descend_to_minimal(const AffineWeyl& aw, const ExtAffElt& start, std::size_t budget) {
  Descent out;
  ExtAffElt e = start;
  int len = aw.length(e);
  std::size_t explored = 0;
  while (true) {
    // BFS over the equal-length plateau of e, remembering how each element was reached.
    std::map<ExtAffElt, std::pair<ExtAffElt, std::string>> parent;
    std::deque<ExtAffElt> queue{e};
    parent.emplace(e, std::make_pair(e, std::string()));
    std::optional<std::pair<ExtAffElt, std::string>> lower;
    ExtAffElt lower_from = e;
    while (!queue.empty() && !lower) {
      ExtAffElt cur = queue.front();
      queue.pop_front();
      for (auto& n : conjugation_neighbors(aw, cur)) {
        int l = aw.length(n.elt);
        if (l < len) {
          lower = std::make_pair(n.elt, n.via);
          lower_from = cur;
          break;
        }
        if (l == len && !parent.count(n.elt)) {
          if (++explored > budget) {
            fail(ErrorKind::PlateauBudgetExceeded, "plateau exploration exceeded " + std::to_string(budget) + " nodes");
          }
          parent.emplace(n.elt, std::make_pair(cur, n.via));
          queue.push_back(n.elt);
        }
      }
    }
    auto trace_path = [&](ExtAffElt x) {
      std::vector<std::string> steps;
      while (x != e) {
        const auto& p = parent.at(x);
        steps.push_back(p.second);
        x = p.first;
      }
      std::reverse(steps.begin(), steps.end());
      out.path.insert(out.path.end(), steps.begin(), steps.end());
    };
    if (!lower) {
      for (auto& [x, p] : parent) out.min_reps.push_back(x);
      std::sort(out.min_reps.begin(), out.min_reps.end(),
                [&](const ExtAffElt& a, const ExtAffElt& b) { return canonical_less(aw, a, b); });
      out.min_length = len;
      return out;
    }
    trace_path(lower_from);
    out.path.push_back(lower->second);
    e = lower->first;
    len = aw.length(e);
  }
}

ClassList::ClassList(std::vector<ConjClassRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    for (const auto& e : records_[i].min_reps) by_min_[e] = static_cast<int>(i);
  }
}

int ClassList::index_of_min(const ExtAffElt& e) const {
  auto it = by_min_.find(e);
  return it == by_min_.end() ? -1 : it->second;
}

int ClassList::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

std::size_t ClassList::num_elliptic() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const ConjClassRecord& r) { return r.elliptic; }));
}

namespace {

std::vector<ConjClassRecord> enumerate_classes(const AffineWeyl& aw, int L) {
  std::vector<ExtAffElt> elts;
  for (const auto& e : aw.ball(L)) {
    if (aw.finite_order(e)) elts.push_back(e);
  }
  std::map<ExtAffElt, int> index;
  for (std::size_t i = 0; i < elts.size(); ++i) index[elts[i]] = static_cast<int>(i);
  std::vector<int> parent(elts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root_of = [&](int x) { return parent[x] == x ? x : parent[x] = root_of(parent[x]); };
  for (std::size_t i = 0; i < elts.size(); ++i) {
    for (const auto& n : conjugation_neighbors(aw, elts[i])) {
      auto it = index.find(n.elt);
      if (it != index.end()) parent[root_of(static_cast<int>(i))] = root_of(it->second);
    }
  }
  std::map<int, std::vector<ExtAffElt>> groups;
  for (std::size_t i = 0; i < elts.size(); ++i) groups[root_of(static_cast<int>(i))].push_back(elts[i]);
  std::vector<ConjClassRecord> out;
  for (auto& [r, members] : groups) {
    ConjClassRecord rec;
    rec.min_length = aw.length(members.front());
    for (const auto& e : members) rec.min_length = std::min(rec.min_length, aw.length(e));
    if (rec.min_length > L - 2) continue;
    for (const auto& e : members) {
      if (aw.length(e) == rec.min_length) rec.min_reps.push_back(e);
    }
    std::sort(rec.min_reps.begin(), rec.min_reps.end(),
              [&](const ExtAffElt& a, const ExtAffElt& b) { return canonical_less(aw, a, b); });
    rec.rep = rec.min_reps.front();
    rec.label = aw.render_word(rec.rep);
    rec.newton = aw.newton_point(rec.rep);
    rec.J_O = rec.newton.J;
    rec.elliptic = aw.is_elliptic(rec.rep);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const ConjClassRecord& a, const ConjClassRecord& b) {
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    return a.label < b.label;
  });
  return out;
}

}  // namespace

ClassList newton_zero_classes(const AffineWeyl& aw, int L, bool check_stability) {
  auto records = enumerate_classes(aw, L);
  if (check_stability) {
    auto wider = enumerate_classes(aw, L + 2);
    std::vector<std::string> a, b;
    for (const auto& r : records) a.push_back(r.label);
    for (const auto& r : wider) {
      if (r.min_length <= L - 2) b.push_back(r.label);
    }
    if (a != b) {
      fail(ErrorKind::UnstableAtBound, "class list changed between L=" + std::to_string(L) + " and L=" +
                                           std::to_string(L + 2) + " (" + std::to_string(a.size()) + " vs " +
                                           std::to_string(b.size()) + " classes)");
    }
  }
  return ClassList(std::move(records));
}

int classify(const AffineWeyl& aw, const ExtAffElt& e, const ClassList& classes) {
  Descent d = descend_to_minimal(aw, e);
  for (const auto& x : d.min_reps) {
    int idx = classes.index_of_min(x);
    if (idx >= 0) return idx;
  }
  fail(ErrorKind::NotFound, "class of " + aw.render(e) + " is not in the class list");
}

bool brute_force_conjugacy_oracle(const AffineWeyl& aw, const ExtAffElt& a, const ExtAffElt& b, int bound) {
  if (a == b) return true;
  for (const auto& g : aw.ball(bound)) {
    if (aw.conj(g, a) == b) return true;
  }
  return false;
}

std::vector<Subset> subset_class_reps(const FinWeylGroup& W) {
  const Subset n = 1U << W.rank();
  std::vector<int> rep(n, -1);
  std::vector<Subset> out;
  for (Subset J = 0; J < n; ++J) {
    if (rep[J] >= 0) continue;
    rep[J] = static_cast<int>(J);
    out.push_back(J);
    for (std::size_t w = 0; w < W.size(); ++w) {
      auto image = W.image_subset(static_cast<int>(w), J);
      if (image && rep[*image] < 0) rep[*image] = static_cast<int>(J);
    }
  }
  return out;
}

namespace {

// Finite quotient (ker N_w cap X) / (1 - w) X for one finite part w.
struct CocycleData {
  IntMat K;  // m x k kernel basis (columns)
  std::size_t k = 0;
  IntMat U;  // k x k, reduces coordinates to Smith coordinates
  std::vector<std::int64_t> diag;
};

CocycleData cocycle_data(const FinWeylGroup& W, int w, std::size_t m) {
  IntMat N(m, IntVec(m, 0));
  IntMat P = identity_mat(m);
  for (int i = 0; i < W.order(w); ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) N[r][c] += P[r][c];
    }
    P = mat_mul(W.matrix(w), P);
  }
  CocycleData data;
  SmithForm f = smith_normal_form(N, m, m);
  data.k = m - f.rank;
  data.K.assign(m, IntVec(data.k, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < data.k; ++c) data.K[r][c] = f.V[r][f.rank + c];
  }
  if (data.k == 0) return data;
  IntMat M(data.k, IntVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    IntVec e(m, 0);
    e[i] = 1;
    IntVec image = sub(e, W.act(w, e));
    auto c = solve_integer(data.K, data.k, image);
    if (!c) fail(ErrorKind::InvalidArgument, "(1 - w)X is not inside ker N_w");
    for (std::size_t r = 0; r < data.k; ++r) M[r][i] = (*c)[r];
  }
  SmithForm g = smith_normal_form(M, data.k, m);
  if (g.rank != data.k) fail(ErrorKind::InvalidArgument, "w is not elliptic on its moved space");
  data.U = g.U;
  data.diag = g.diag;
  return data;
}

IntVec cocycle_key(const CocycleData& d, const IntVec& x) {
  if (d.k == 0) return {};
  auto c = solve_integer(d.K, d.k, x);
  IntVec u = rigid::apply(d.U, *c);
  for (std::size_t i = 0; i < d.k; ++i) u[i] = ((u[i] % d.diag[i]) + d.diag[i]) % d.diag[i];
  return u;
}

std::vector<IntVec> cocycle_reps(const CocycleData& d) {
  std::vector<IntVec> coords = {IntVec()};
  for (std::size_t i = 0; i < d.k; ++i) {
    std::vector<IntVec> next;
    for (const auto& c : coords) {
      for (std::int64_t t = 0; t < d.diag[i]; ++t) {
        IntVec v = c;
        v.push_back(t);
        next.push_back(v);
      }
    }
    coords = next;
  }
  std::vector<IntVec> out;
  for (const auto& t : coords) {
    if (d.k == 0) {
      out.push_back(IntVec(d.K.size(), 0));
      continue;
    }
    auto c = solve_integer(d.U, d.k, t);
    out.push_back(rigid::apply(d.K, *c));
  }
  return out;
}

std::size_t elliptic_count_full_lattice(const AffineWeyl& aw, Subset J) {
  const auto& W = aw.W();
  const std::size_t m = aw.m();
  std::vector<int> generators;
  for (std::size_t j = 0; j < aw.rank(); ++j) {
    if (contains(J, j)) generators.push_back(W.simple(j));
  }
  for (int z : W.double_coset_reps(J, J)) {
    auto image = W.image_subset(z, J);
    if (image && *image == J && z != 0) generators.push_back(z);
  }
  std::map<int, CocycleData> data;
  using Key = std::pair<int, IntVec>;
  std::set<Key> seen;
  std::size_t orbits = 0;
  for (int w : W.parabolic_elements(J)) {
    IntMat a = W.matrix(w);
    for (std::size_t r = 0; r < m; ++r) a[r][r] -= 1;
    if (rank_int(a) != subset_size(J)) continue;
    data.emplace(w, cocycle_data(W, w, m));
  }
  for (auto& [w, d] : data) {
    for (const auto& x : cocycle_reps(d)) {
      Key key{w, cocycle_key(d, x)};
      if (seen.count(key)) continue;
      ++orbits;
      std::deque<std::pair<int, IntVec>> queue{{w, x}};
      seen.insert(key);
      while (!queue.empty()) {
        auto [cw, cx] = queue.front();
        queue.pop_front();
        for (int u : generators) {
          int nw = W.mul(W.mul(u, cw), W.inv(u));
          IntVec nx = W.act(u, cx);
          Key nk{nw, cocycle_key(data.at(nw), nx)};
          if (seen.insert(nk).second) queue.push_back({nw, nx});
        }
      }
    }
  }
  return orbits;
}

}  // namespace

CountIdentityReport count_identity_check(const AffineWeyl& aw, const ClassList& classes) {
  CountIdentityReport report;
  report.class_count = classes.size();
  for (Subset J : subset_class_reps(aw.W())) {
    CountIdentityTerm term;
    term.J = J;
    term.elliptic_classes = elliptic_count_full_lattice(aw, J);
    if (J == 0) {
      term.quotient_elliptic_classes = 1;
    } else {
      AffineWeyl q(semisimple_quotient(aw.datum(), J).datum);
      term.quotient_elliptic_classes = newton_zero_classes(q, 8, false).num_elliptic();
    }
    report.total += term.elliptic_classes;
    report.quotient_total += term.quotient_elliptic_classes;
    report.terms.push_back(term);
  }
  report.holds = report.total == report.class_count;
  return report;
}

}  // namespace rigid
