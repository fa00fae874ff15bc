#pragma once

#include <optional>

#include "cla/altmap.hpp"
#include "cla/graded_space.hpp"

namespace cla {

/// Colour Lie algebra as a structure-constant table over a graded basis,
/// with an optional invariant form (ε-quadratic structure).
class ColourLieAlgebra {
 public:
  ColourLieAlgebra() = default;
  ColourLieAlgebra(GradedSpace space, std::vector<std::vector<Vec>> brackets,
                   std::optional<FormEps> form = std::nullopt);

  const GradedSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::optional<FormEps>& form() const { return form_; }
  ColourLieAlgebra with_form(FormEps f) const;

  const Vec& bracket(int i, int j) const { return brackets_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_left(int i, const Vec& y) const;  // {e_i, y}

  /// ε(z,x){x,{y,z}} + ε(x,y){y,{z,x}} + ε(y,z){z,{x,y}} at basis indices.
  Vec jacobi_residual(int x, int y, int z) const;

  /// Grading, ε-antisymmetry and ε-Jacobi on all basis pairs/triples.
  /// The Jacobi loop is OpenMP-parallel over triples.
  Verdict validate(int witness_cap = 20) const;
  /// Straightforward serial loop, kept as a reference for the parallel path.
  Verdict validate_serial(int witness_cap = 20) const;
  /// Jacobi identity only (no grading or antisymmetry checks).
  Verdict validate_jacobi(int witness_cap = 20) const;

  /// ad-invariance of the form on all basis triples plus form validity.
  Verdict validate_quadratic(int witness_cap = 20) const;

 private:
  GradedSpace space_;
  std::vector<std::vector<Vec>> brackets_;
  std::optional<FormEps> form_;

  Verdict validate_impl(int witness_cap, bool parallel_jacobi,
                        bool jacobi_only) const;
};

ColourLieAlgebra cla_dsum(const ColourLieAlgebra& g, const ColourLieAlgebra& h);

/// A colour Lie algebra realized by endomorphisms of a graded space.
struct EndoAlgebra {
  ColourLieAlgebra algebra;
  GradedSpace on;             // the space acted on
  std::vector<Matrix> endos;  // basis element i as a matrix on `on`
};

/// Builds the abstract structure-constant table of a space of matrices
/// closed under {a,b} = ab − ε(a,b)ba, with form coeff·Tr_ε(fg).
EndoAlgebra endo_algebra(const GradedSpace& on,
                         std::vector<BasisVector> basis_names,
                         std::vector<Matrix> endos, const Scalar& trace_coeff);

/// gl_ε(V): all elementary matrices, form Tr_ε(fg).
EndoAlgebra gl_eps(const GradedSpace& v);

/// so_ε(V, B): kernel of (f(v),w) + ε(f,v)(v,f(w)) = 0, computed degree by
/// degree; form coeff·Tr_ε(fg), default −1/2.
EndoAlgebra so_eps(const GradedSpace& v, const FormEps& b);
EndoAlgebra so_eps(const GradedSpace& v, const FormEps& b,
                   const Scalar& trace_coeff);

/// so_ε(W, Ω) for the graded symplectic plane W = span(p, q) with
/// |p| = γ, |q| = −γ, Ω(p,q) = 1, normalized to the standard E, H, F.
struct Sl2Data {
  EndoAlgebra so;  // basis E, H, F in this order
  GradedSpace w;
  FormEps omega;
};
Sl2Data sl2_make(const CommutationFactor& cf, const GroupElem& gamma);

/// Eigenspace decomposition of ad(H) with eigenvalues −2..2; passes when
/// the eigenspaces exhaust the algebra and the ±2 ones are lines.
struct HeisenbergResult {
  Verdict verdict;
  std::vector<int> eigdims;  // dims for eigenvalues −2,−1,0,1,2
};
HeisenbergResult heisenberg_grading(const ColourLieAlgebra& g, const Vec& h);

}  // namespace cla
