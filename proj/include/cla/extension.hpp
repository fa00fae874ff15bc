#pragma once

#include "cla/curvature.hpp"

namespace cla {

/// Degree 0, ε-alternating, and the two invariance equations of the
/// extension theorem on all basis triples.
Verdict phi_validate(const OrthRep& r, const AltMap& phi,
                     int witness_cap = 20);

/// The three equivalent conditions of the extension theorem, computed
/// independently: the ε-Jacobi identity of the assembled bracket, vanishing
/// of N(μ+φ), and N(μ) = −N(φ).
struct TripleVerdict {
  Verdict jacobi;
  Verdict norm_zero;
  Verdict norm_balance;
  bool agree() const {
    return jacobi.pass == norm_zero.pass && jacobi.pass == norm_balance.pass;
  }
};

struct ExtendResult {
  ColourLieAlgebra algebra;  // candidate bracket on g⊕V with B_g ⟂ ( , )_V
  AltMap mu;
  TripleVerdict verdict;
  Verdict phi_check;
  int v_offset = 0;  // index of the first V basis vector inside g⊕V
};

/// Assembles g̃ = g⊕V with {v,w} = μ(v,w)+φ(v,w) and computes the triple
/// verdict. Throws if φ is invalid unless `force` is set (negative
/// fixtures probe invalid data on purpose).
ExtendResult extend(const OrthRep& r, const AltMap& phi, bool force = false);

/// extend with φ = 0: the colour Z₂-Lie type test, N(μ) = 0.
ExtendResult z2_lie_check(const OrthRep& r);

struct ExtendSl2Result {
  ColourLieAlgebra algebra;  // g ⊕ sl(2) ⊕ V⊗k²
  OrthRep tensor_rep;        // g ⊕ so(W) acting on V⊗W
  Verdict verdict;           // cla_validate + quad_validate of the candidate
  Verdict faithful;          // warning only; theorem hypothesis
  int h_index = 0;           // position of H in the assembled basis
};

/// The dim W = 2 branch: g̃ = g ⊕ sl(2,k) ⊕ V⊗k², which closes exactly
/// when the representation is special.
ExtendSl2Result extend_sl2(const OrthRep& r, const GroupElem& gamma);

}  // namespace cla
