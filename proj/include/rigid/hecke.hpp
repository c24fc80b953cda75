#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rigid/conj.hpp"

namespace rigid {

/// Iwahori-Matsumoto form: sum of c_w T_w.
using HeckeElt = std::map<ExtAffElt, LaurentPoly>;

/// Key (x, w) of theta_x T_w (theta-left) or T_w theta_x (T-left); w is a finite index.
using BKey = std::pair<IntVec, int>;

/// Sum of c theta_x T_w.
struct BernElt {
  std::map<BKey, LaurentPoly> terms;
  void add(const IntVec& x, int w, const LaurentPoly& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const BernElt& a, const BernElt& b) { return a.terms == b.terms; }
  friend bool operator!=(const BernElt& a, const BernElt& b) { return !(a == b); }
};

/// Sum of c T_w theta_x.
struct TLeftElt {
  std::map<BKey, LaurentPoly> terms;
  void add(const IntVec& x, int w, const LaurentPoly& c);
};

/// Element of A = Lambda[theta_x]: x -> coefficient.
using ThetaPoly = std::map<IntVec, LaurentPoly>;

void add_term(HeckeElt& h, const ExtAffElt& w, const LaurentPoly& c);
HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
BernElt operator+(const BernElt& a, const BernElt& b);
BernElt operator-(const BernElt& a, const BernElt& b);
BernElt operator*(const LaurentPoly& c, const BernElt& h);

class HeckeAlgebra;
using HeckeAlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

class HeckeAlgebra {
 public:
  /// simple_var[s] is the ParamSqrt variable of affine simple s.
  HeckeAlgebra(AffineWeylPtr aw, VarTablePtr vars, std::vector<int> simple_var);
  /// Orbit variables v<name> (Q<name>), then twist variables z1..zm.
  static VarTablePtr default_vars(const AffineWeyl& aw);
  static HeckeAlgebraPtr make(AffineWeylPtr aw);

  const AffineWeyl& weyl() const { return *aw_; }
  const AffineWeylPtr& weyl_ptr() const { return aw_; }
  const VarTablePtr& vars() const { return vars_; }
  int simple_var(int s) const { return simple_var_[s]; }
  LaurentPoly v(int s) const;
  LaurentPoly Q(int s) const;
  LaurentPoly v_of(const ExtAffElt& w) const;
  LaurentPoly v_finite(int w) const;
  /// Variable index of the twist coordinate z_{i+1}, or -1.
  int twist_var(std::size_t i) const;

  // Iwahori-Matsumoto arithmetic.
  HeckeElt one() const;
  HeckeElt T(const ExtAffElt& w) const;
  HeckeElt mul_simple_right(const HeckeElt& h, int s) const;
  HeckeElt mul_simple_left(int s, const HeckeElt& h) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt T_inverse(const ExtAffElt& w) const;
  const std::pair<std::vector<int>, int>& word(const ExtAffElt& w) const;

  // Bernstein presentation.
  BernElt bern_one() const;
  BernElt theta(const IntVec& x) const;
  BernElt bern_T_finite(int w) const;
  BernElt bern_T_finite_inverse(int w) const;
  /// C(x) = theta_x T_s - T_s theta_{s x} for finite simple i.
  ThetaPoly bl_correction(std::size_t i, const IntVec& x) const;
  BernElt left_mul_Ts(std::size_t i, const BernElt& b) const;
  BernElt right_mul_Ts(const BernElt& b, std::size_t i) const;
  BernElt left_mul_T(int w, const BernElt& b) const;
  BernElt right_mul_T(const BernElt& b, int w) const;
  BernElt bern_mul(const BernElt& a, const BernElt& b) const;
  TLeftElt to_tleft(const BernElt& b) const;
  BernElt from_tleft(const TLeftElt& t) const;
  /// Finite Hecke product T_a T_b as w -> coefficient.
  const std::map<int, LaurentPoly>& finite_mul(int a, int b) const;

  const BernElt& bern_of(const ExtAffElt& w) const;
  BernElt to_bernstein(const HeckeElt& h) const;
  const HeckeElt& theta_im(const IntVec& x) const;
  HeckeElt to_im(const BernElt& b) const;

  /// h = sum_u T_u h_u with u in W^J and h_u in H_J (theta-left, finite parts in W_J).
  std::map<int, BernElt> coset_normal_form(const BernElt& h, Subset J) const;
  /// sum over u in W^J of the (u, u) block of left multiplication by h.
  BernElt bar_restrict(const BernElt& h, Subset J) const;

 private:
  BernElt generator_bernstein(int s) const;
  BernElt omega_bernstein(int o) const;

  AffineWeylPtr aw_;
  VarTablePtr vars_;
  std::vector<int> simple_var_;
  mutable std::mutex mutex_;
  mutable std::map<ExtAffElt, std::pair<std::vector<int>, int>> words_;
  mutable std::map<ExtAffElt, BernElt> bern_cache_;
  mutable std::map<IntVec, HeckeElt> theta_cache_;
  mutable std::map<std::pair<int, int>, std::map<int, LaurentPoly>> finite_cache_;
};

std::string render(const HeckeElt& h, const AffineWeyl& aw);
std::string render(const BernElt& b, const AffineWeyl& aw);

/// T_O for a class: T of the canonical minimal representative.
HeckeElt class_element(const HeckeAlgebra& H, const ConjClassRecord& O);

struct CocenterCombination {
  std::map<std::string, LaurentPoly> coeffs;  // class label -> coefficient
  std::map<std::string, ExtAffElt> reps;
  std::set<std::string> adhoc;  // labels of classes outside the provided list
};

class CocenterReducer {
 public:
  CocenterReducer(const HeckeAlgebra& H, const ClassList& classes, bool allow_adhoc = false,
                  std::size_t budget = 1000000);
  CocenterCombination reduce(const ExtAffElt& e);
  CocenterCombination reduce(const HeckeElt& h);

 private:
  const std::map<std::string, LaurentPoly>& reduce_memo(const ExtAffElt& e);

  const HeckeAlgebra& H_;
  const ClassList& classes_;
  bool allow_adhoc_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::map<ExtAffElt, std::map<std::string, LaurentPoly>> memo_;
  std::map<std::string, ExtAffElt> reps_;
  std::set<std::string> adhoc_;
};

/// "(Q1-1)*T[s0s1] + Q1*T[s0]": descending length, then word.
std::string render(const CocenterCombination& c, const AffineWeyl& aw);
/// Coefficient rendering in the Q variables, parenthesized when multi-term.
std::string render_coefficient(const LaurentPoly& c);

}  // namespace rigid
