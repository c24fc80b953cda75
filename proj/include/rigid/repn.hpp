#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rigid/hecke.hpp"

namespace rigid {

struct ModuleInfo {
  std::string kind = "onedim";  // onedim | lift | induced | inflated | restricted | twisted
  std::string name;
  Subset J = 0;                 // induced from H_J
  std::string twist = "trivial";
  std::map<std::string, LaurentPoly> signature;  // generator traces
};

/// Raw generator data of a module of H_level (level = Pi means the full algebra).
struct ModuleData {
  Subset level = 0;
  std::size_t dim = 0;
  std::map<int, PolyMatrix> T;      // simple index -> matrix (finite i in level; all S^a at full level)
  std::vector<PolyMatrix> omega;    // full level only, indexed like AffineWeyl::omega()
  std::vector<PolyMatrix> theta;    // theta_{e_k}
  std::vector<PolyMatrix> theta_inv;
  ModuleInfo info;
};

class FinDimModule;
using ModulePtr = std::shared_ptr<const FinDimModule>;

class FinDimModule {
 public:
  FinDimModule(HeckeAlgebraPtr H, ModuleData data);

  const HeckeAlgebra& algebra() const { return *H_; }
  const HeckeAlgebraPtr& algebra_ptr() const { return H_; }
  Subset level() const { return data_.level; }
  bool full() const;
  std::size_t dim() const { return data_.dim; }
  const ModuleData& data() const { return data_; }
  const ModuleInfo& info() const { return data_.info; }

  const PolyMatrix& T(int s) const { return data_.T.at(s); }
  PolyMatrix theta(const IntVec& x) const;
  PolyMatrix T_finite(int w) const;
  /// pi(T_w) along the cached reduced word (full level).
  PolyMatrix T_of(const ExtAffElt& w) const;
  PolyMatrix act(const BernElt& b) const;
  PolyMatrix act(const HeckeElt& h) const;
  LaurentPoly trace(const BernElt& b) const;
  LaurentPoly trace(const HeckeElt& h) const;

 private:
  HeckeAlgebraPtr H_;
  ModuleData data_;
  mutable std::mutex mutex_;
  mutable std::map<IntVec, PolyMatrix> theta_cache_;
  mutable std::map<ExtAffElt, PolyMatrix> T_cache_;
};

/// Checks every defining relation of H_level; throws RelationFailed naming the relation.
std::vector<std::string> verify_relations(const FinDimModule& M);
ModulePtr certified(HeckeAlgebraPtr H, ModuleData data);

/// Fills T for affine simples and Omega from Bernstein forms (full level).
void complete_affine(const HeckeAlgebra& H, ModuleData& data);
/// Fills theta from the IM generator matrices (full level).
void derive_theta_from_im(const HeckeAlgebra& H, ModuleData& data);

std::vector<ModulePtr> one_dim_modules(HeckeAlgebraPtr H, Subset J, bool with_twist);

/// Module of a finite Hecke algebra on some affine simples, lifted by scalars on the rest
/// and on the nontrivial elements of Omega.
ModulePtr lift_from_parahoric(HeckeAlgebraPtr H, const std::map<int, PolyMatrix>& finite_T,
                              const std::map<int, LaurentPoly>& scalars, const std::string& name,
                              const std::vector<LaurentPoly>& omega_scalars = {});

/// The five irreducible modules of the finite C2 Hecke algebra on simples a, b (dims 1,1,1,1,2).
struct FiniteIrrep {
  std::string name;
  PolyMatrix Ta, Tb;
};
std::vector<FiniteIrrep> finite_c2_irreps(const LaurentPoly& Qa, const LaurentPoly& Qb);

/// Hecke algebra of the semisimple quotient of J, sharing the ambient variables.
struct QuotientAlgebra {
  QuotientDatum q;
  HeckeAlgebraPtr H;
};
QuotientAlgebra quotient_algebra(const HeckeAlgebraPtr& H, Subset J);

/// chi_t pullback of a full-level module of the quotient algebra to H_J;
/// twist[j] is the value of the j-th cotwist coordinate (empty = trivial).
ModulePtr inflate(const HeckeAlgebraPtr& H, Subset J, const QuotientAlgebra& qa, const FinDimModule& sigma,
                  const std::vector<LaurentPoly>& twist);
/// Symbolic twist: the cotwist coordinates carry z1, z2, ...
std::vector<LaurentPoly> symbolic_twist(const HeckeAlgebra& H, Subset J);

/// H_K (x)_{H_J} sigma for J subset K; K = Pi gives a full-level module.
ModulePtr induce(const FinDimModule& sigma, Subset K);
ModulePtr restrict_to(const FinDimModule& M, Subset K);
/// sigma of level J twisted along w (w(J) = K), a module of level K.
ModulePtr twist_by(const FinDimModule& sigma, int w);

struct VirtualModule {
  std::vector<std::pair<long, ModulePtr>> terms;
  LaurentPoly trace(const BernElt& b) const;
};

/// |N_K| for N_K = {z in ^K W^K : z(K) = K}.
std::size_t normalizer_size(const FinWeylGroup& W, Subset K);
/// Adjoint of the A-operator on elements: trace(A M, h) = trace(M, a_adjoint(h)).
BernElt a_adjoint(const HeckeAlgebra& H, const BernElt& h, bool reverse_order = false);
LaurentPoly a_trace(const FinDimModule& M, const BernElt& h);

}  // namespace rigid
