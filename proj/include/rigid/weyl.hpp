#pragma once

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "rigid/rootdata.hpp"

namespace rigid {

/// Finite Weyl group W, fully materialized. Index 0 is the identity.
class FinWeylGroup {
 public:
  FinWeylGroup(const BasedRootDatum& d, const RootSystem& rs, std::size_t bound = 100000);

  std::size_t size() const { return mats_.size(); }
  std::size_t rank() const { return simple_.size(); }
  int simple(std::size_t i) const { return simple_[i]; }
  const IntMat& matrix(int w) const { return mats_[w]; }
  IntVec act(int w, const IntVec& x) const { return rigid::apply(mats_[w], x); }
  IntVec act_dual(int w, const IntVec& y) const { return rigid::apply(dual_[w], y); }
  RatVec act(int w, const RatVec& x) const;

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int length(int w) const { return len_[w]; }
  int order(int w) const { return order_[w]; }
  /// Lexicographically least reduced word in simple indices (0-based).
  const std::vector<int>& word(int w) const { return words_[w]; }
  int from_word(const std::vector<int>& word) const;
  int find(const IntMat& m) const;
  /// s_beta for root index beta.
  int reflection(int root) const { return reflections_[root]; }

  bool has_right_descent(int w, std::size_t i) const;
  bool has_left_descent(int w, std::size_t i) const;
  bool in_parabolic(int w, Subset J) const;
  /// Minimal length representatives W^J of W / W_J, sorted by (length, index).
  std::vector<int> min_coset_reps(Subset J) const;
  /// w = u * w_J with u in W^J.
  std::pair<int, int> coset_factor(int w, Subset J) const;
  /// Elements of ^K W^J sorted by (length, index).
  std::vector<int> double_coset_reps(Subset K, Subset J) const;
  /// J_w = J cap w^{-1} K w and K_w = K cap w J w^{-1} (= w(J_w)).
  std::pair<Subset, Subset> double_coset_subsets(int w, Subset K, Subset J) const;
  /// Image w(J) as a subset when every simple root of J maps to a simple root.
  std::optional<Subset> image_subset(int w, Subset J) const;
  /// Index i with w(alpha_j) = alpha_i, or -1.
  int simple_image(int w, std::size_t j) const;
  /// Elements of the parabolic subgroup W_J.
  std::vector<int> parabolic_elements(Subset J) const;

 private:
  const RootSystem* rs_;
  std::vector<IntMat> mats_;
  std::vector<IntMat> dual_;
  std::map<IntMat, int> index_;
  std::vector<int> simple_;
  std::vector<int> inv_;
  std::vector<int> len_;
  std::vector<int> order_;
  std::vector<std::vector<int>> words_;
  std::vector<int> reflections_;
  std::vector<int> table_;  // dense multiplication table when small
  std::vector<std::vector<int>> neg_simple_;  // neg_simple_[w][i]: w(alpha_i) < 0
};

/// t_x w.
struct ExtAffElt {
  IntVec x;
  int w = 0;

  friend bool operator==(const ExtAffElt& a, const ExtAffElt& b) { return a.w == b.w && a.x == b.x; }
  friend bool operator!=(const ExtAffElt& a, const ExtAffElt& b) { return !(a == b); }
  friend bool operator<(const ExtAffElt& a, const ExtAffElt& b) {
    return a.x != b.x ? a.x < b.x : a.w < b.w;
  }
};

struct ExtAffHash {
  std::size_t operator()(const ExtAffElt& e) const {
    std::size_t h = std::hash<int>()(e.w);
    for (auto v : e.x) h = h * 1000003U ^ std::hash<std::int64_t>()(v);
    return h;
  }
};

struct AffineSimple {
  ExtAffElt elt;
  std::string name;
  bool finite = true;
  int finite_index = -1;  // for finite s_i
  int component = -1;
  int gamma_root = -1;    // for s0 = t_{-gamma} s_gamma
};

struct NewtonPoint {
  RatVec nu;  // dominant
  Subset J = 0;
  bool is_zero() const;
};

struct ParamOrbit {
  std::string name;        // "0", "1", ...
  std::vector<int> members;  // affine simple indices
};

/// Derived affine data of a semisimple based root datum: W, S^a, Omega,
/// parameter orbits and the alpha^vee in 2X^vee flags.
class AffineWeyl {
 public:
  explicit AffineWeyl(BasedRootDatum d);

  const BasedRootDatum& datum() const { return datum_; }
  const RootSystem& roots() const { return roots_; }
  const FinWeylGroup& W() const { return *W_; }
  std::size_t m() const { return datum_.m; }
  std::size_t rank() const { return datum_.rank(); }
  Subset all() const { return full_subset(rank()); }

  const std::vector<AffineSimple>& simples() const { return simples_; }
  std::size_t num_simples() const { return simples_.size(); }
  /// Affine simple index of finite s_i is i; affine reflections follow.
  const std::vector<int>& affine_indices() const { return affine_indices_; }
  const std::vector<ExtAffElt>& omega() const { return omega_; }
  const std::vector<std::string>& omega_names() const { return omega_names_; }
  int omega_mul(int a, int b) const { return omega_mul_[a][b]; }
  int omega_inv(int a) const { return omega_inv_[a]; }
  /// Index of omega * s * omega^{-1} among the affine simples.
  int omega_conj(int o, int s) const { return omega_perm_[o][s]; }
  int find_omega(const ExtAffElt& e) const;

  const std::vector<ParamOrbit>& orbits() const { return orbits_; }
  int orbit_of(int s) const { return orbit_of_[s]; }
  bool two_xvee(std::size_t i) const { return flags_[i]; }
  /// Affine simple reflection paired with a flagged finite simple root.
  int tilde(std::size_t i) const { return tilde_[i]; }
  /// Coxeter m(s, s'), 0 when infinite.
  int coxeter(int s, int t) const { return coxeter_[s][t]; }

  ExtAffElt identity() const { return {IntVec(m(), 0), 0}; }
  ExtAffElt translation(const IntVec& x) const { return {x, 0}; }
  ExtAffElt finite(int w) const { return {IntVec(m(), 0), w}; }
  ExtAffElt mul(const ExtAffElt& a, const ExtAffElt& b) const;
  ExtAffElt inv(const ExtAffElt& a) const;
  ExtAffElt conj(const ExtAffElt& g, const ExtAffElt& e) const { return mul(mul(g, e), inv(g)); }
  ExtAffElt pow(const ExtAffElt& a, long n) const;
  ExtAffElt simple(int s) const { return simples_[s].elt; }

  int length(const ExtAffElt& e) const;
  /// Lexicographically least reduced word (by generator name) and the
  /// trailing Omega index: e = s_{i1} ... s_{ik} omega.
  std::pair<std::vector<int>, int> reduced_word(const ExtAffElt& e) const;
  ExtAffElt from_word(const std::vector<int>& simples, int omega_index) const;
  /// Parses comma-separated generator names (s0, s1, ..., tau...).
  ExtAffElt parse_word(const std::string& text) const;

  std::string render(const ExtAffElt& e) const;       // t[x]*s1s2
  std::string render_word(const ExtAffElt& e) const;  // s0s1tau, or 1

  IntVec dominant(const IntVec& x) const;
  RatVec dominant(const RatVec& x) const;
  bool is_dominant(const IntVec& x) const;
  NewtonPoint newton_point(const ExtAffElt& e) const;
  /// lambda = sum_{i<n} w^i x with n the order of the finite part.
  IntVec newton_lambda(const ExtAffElt& e) const;
  bool is_elliptic(const ExtAffElt& e) const;
  bool finite_order(const ExtAffElt& e) const { return is_zero(newton_lambda(e)); }

  /// All elements of length <= L sorted by (length, x, w).
  std::vector<ExtAffElt> ball(int L) const;
  /// BFS word length over S^a and Omega, computed independently of length().
  std::map<ExtAffElt, int> bfs_lengths(int L) const;

 private:
  void build_affine_simples();
  void build_omega();
  void build_orbits();

  BasedRootDatum datum_;
  RootSystem roots_;
  std::unique_ptr<FinWeylGroup> W_;
  std::vector<AffineSimple> simples_;
  std::vector<int> affine_indices_;
  std::vector<int> name_order_;
  std::vector<ExtAffElt> omega_;
  std::vector<std::string> omega_names_;
  std::vector<std::vector<int>> omega_mul_;
  std::vector<int> omega_inv_;
  std::vector<std::vector<int>> omega_perm_;
  std::vector<ParamOrbit> orbits_;
  std::vector<int> orbit_of_;
  std::vector<bool> flags_;
  std::vector<int> tilde_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<int> positive_coroots_;
  IntMat invariant_rank_mat_;
};

using AffineWeylPtr = std::shared_ptr<const AffineWeyl>;

}  // namespace rigid
