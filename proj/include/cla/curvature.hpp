#pragma once

#include "cla/representation.hpp"

namespace cla {

/// Curvature-like 4-tensor on V: ε-antisymmetric in the first pair and
/// ε-symmetric under swapping the two pairs.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(GradedSpace space);
  static CurvatureTensor from_values(
      const GradedSpace& space,
      const std::function<Scalar(int, int, int, int)>& fn);

  const GradedSpace& space() const { return space_; }
  const Scalar& at(int a, int b, int c, int d) const {
    return vals_[idx(a, b, c, d)];
  }
  Scalar& at(int a, int b, int c, int d) { return vals_[idx(a, b, c, d)]; }

  /// The two defining symmetries, on all basis 4-tuples.
  Verdict validate(int witness_cap = 20) const;
  /// Full ε-alternating check (stronger than membership in R(V)).
  bool is_alternating() const;

  /// β(R)(A,B,C,D) = R(A,B,C,D) + ε(A,B+C)R(B,C,A,D) + ε(A+B,C)R(C,A,B,D).
  CurvatureTensor bianchi() const;

  CurvatureTensor operator+(const CurvatureTensor& o) const;
  CurvatureTensor operator-(const CurvatureTensor& o) const;
  CurvatureTensor scaled(const Scalar& c) const;
  bool operator==(const CurvatureTensor& o) const;
  bool is_zero() const;

  /// Reads the tensor off on canonical tuples as an element of Alt⁴(V).
  /// Only faithful when the tensor is ε-alternating.
  AltMap to_altmap() const;

 private:
  GradedSpace space_;
  std::vector<Scalar> vals_;
  std::size_t idx(int a, int b, int c, int d) const {
    int n = space_.dim();
    return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d;
  }
};

/// R_{μ+φ}(A,B,C,D) = B_g(μ(A,B), μ(C,D)) + (φ(φ(A,B),C), D).
CurvatureTensor curvature_from(const AltMap& mu, const FormEps& b_g,
                               const AltMap* phi, const FormEps& form_v);

/// R_{μ_can}(A,B,C,D) = (μ_can(A,B)(C), D) from the closed form.
CurvatureTensor canonical_curvature(const FormEps& form_v);

/// Condition (b): μ(A,B)(C) + ε(B,C)μ(A,C)(B) =
/// (A,B)C + ε(B,C)(A,C)B − 2(B,C)A on all basis triples. Reports all
/// violating triples up to the cap.
Verdict special_condition_b(const OrthRep& r, const AltMap& mu,
                            int witness_cap = 20);

/// Curvature criterion: R_μ − (1/3)β(R_μ) = R_{μ_can}.
Verdict special_condition_curvature(const OrthRep& r, const AltMap& mu);

/// Runs both criteria and requires them to agree; throws on disagreement.
Verdict is_special(const OrthRep& r);
Verdict is_special(const OrthRep& r, const AltMap& mu);

}  // namespace cla
