#pragma once

#include "cla/altmap.hpp"
#include "cla/colour_lie.hpp"

namespace cla {

/// ε-orthogonal representation: an ε-quadratic colour Lie algebra acting
/// on a graded space with an invariant non-degenerate ε-symmetric form.
struct OrthRep {
  ColourLieAlgebra algebra;    // carries the form B_g
  GradedSpace space;           // V
  FormEps form;                // ( , )_V
  std::vector<Matrix> action;  // ρ(x_i) per algebra basis element

  /// ρ(x) for a coordinate vector x.
  Matrix act(const Vec& x) const;
  /// ρ(x)(v).
  Vec act(const Vec& x, const Vec& v) const;

  /// Morphism property, skew-invariance, action homogeneity, dim V ≥ 2.
  Verdict validate(int witness_cap = 20) const;
  /// Trivial action kernel.
  bool is_faithful() const;
};

/// The defining representation of an endomorphism algebra.
OrthRep fundamental_rep(const EndoAlgebra& ea, const FormEps& form);

/// Moment map via the dual basis: μ(v,w) = Σ (e_i(v), w) e^i.
AltMap moment_map(const OrthRep& r);

/// Independent recheck of the defining identity B_g(x, μ(v,w)) = (x(v),w)
/// on all basis combinations.
Verdict moment_check(const OrthRep& r, const AltMap& mu, int witness_cap = 20);

/// Canonical moment map from the closed form
/// μ_can(u,v)(w) = ε(v,w)(u,w)v − (v,w)u, expressed in the basis of `so`.
AltMap mu_can(const GradedSpace& v, const FormEps& form, const EndoAlgebra& so);
/// Convenience overload building so_ε(V, B) with form −½Tr_ε(fg) itself.
AltMap mu_can(const GradedSpace& v, const FormEps& form);

/// The closed-form endomorphism μ_can(u,v) for homogeneous u, v.
Matrix mu_can_endo(const FormEps& form, const Vec& u, const GroupElem& du,
                   const Vec& v, const GroupElem& dv);

/// Tensor product of ε-orthogonal representations: g⊕h acting on V⊗W with
/// ρ(g+h)(v⊗w) = ρ_g(g)(v)⊗w + ε(h,v) v⊗ρ_h(h)(w).
OrthRep rep_tensor(const OrthRep& r, const OrthRep& s);

/// g×V → V pairing from the action, the glue of ∧_ρ.
Pairing action_pairing(const OrthRep& r);

}  // namespace cla
