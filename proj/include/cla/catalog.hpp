#pragma once

#include "cla/representation.hpp"

namespace cla {

/// The fundamental representation of so_ε(V, B) with algebra form
/// −½Tr_ε(fg). Special; ψ and Q vanish.
OrthRep catalog_fundamental_so(const GradedSpace& v, const FormEps& b);

/// so_ε(V)⊕so_ε(W) acting on V⊗W, where (W, Ω) is the graded symplectic
/// plane attached to γ; algebra forms ¼Tr_ε on the V factor and −½Tr_ε on
/// the W factor. Special.
OrthRep catalog_so_tensor_sl2(const GradedSpace& v, const FormEps& bv,
                              const GroupElem& gamma);

/// The centralizer m of J inside so_ε(V, B), J² = λId, acting on V with
/// the invariant form B_m solved from the stated moment map. Special.
OrthRep catalog_centralizer_j(const GradedSpace& v, const FormEps& b,
                              const Matrix& j, const Scalar& lambda);

}  // namespace cla
