#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cla/grading.hpp"
#include "cla/matrix.hpp"
#include "cla/verdict.hpp"

namespace cla {

struct BasisVector {
  std::string name;
  GroupElem degree;
};

/// Γ-graded vector space with an ordered, named, homogeneous basis.
/// Cheap to copy; the payload is shared and immutable.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(FieldDescriptor field, CommutationFactor cf,
              std::vector<BasisVector> basis);

  int dim() const { return static_cast<int>(d_->basis.size()); }
  const std::vector<BasisVector>& basis() const { return d_->basis; }
  const std::string& name(int i) const { return d_->basis[i].name; }
  const GroupElem& degree(int i) const { return d_->basis[i].degree; }
  int parity(int i) const { return d_->parities[i]; }
  const Scalar& eps(int i, int j) const {
    return d_->eps_table[static_cast<std::size_t>(i) * dim() + j];
  }

  const FieldDescriptor& field() const { return d_->field; }
  const CommutationFactor& cf() const { return d_->cf; }
  const AbelianGroup& group() const { return d_->cf.group(); }

  int index_of(const std::string& name) const;  // -1 if absent
  std::string tuple_str(const std::vector<int>& indices) const;

  /// Degree of a homogeneous coordinate vector, nullopt for 0 or mixed.
  std::optional<GroupElem> degree_of(const Vec& v) const;

  bool operator==(const GradedSpace& o) const;

  /// The trivially graded line k, used as codomain of scalar-valued maps.
  static GradedSpace scalar_line(const FieldDescriptor& f,
                                 const CommutationFactor& cf);
  bool is_scalar_line() const;

 private:
  struct Data {
    FieldDescriptor field;
    CommutationFactor cf;
    std::vector<BasisVector> basis;
    std::vector<int> parities;
    std::vector<Scalar> eps_table;
  };
  std::shared_ptr<const Data> d_;
};

GradedSpace space_tensor(const GradedSpace& v, const GradedSpace& w);
GradedSpace space_dsum(const GradedSpace& v, const GradedSpace& w);

/// Linear map between graded spaces; column j holds the image of source
/// basis vector j. `degree` marks a declared homogeneous degree.
struct GradedLinearMap {
  GradedSpace source, target;
  Matrix mat;
  std::optional<GroupElem> degree;

  static GradedLinearMap identity(const GradedSpace& v);
  static GradedLinearMap from_matrix(const GradedSpace& source,
                                     const GradedSpace& target, Matrix m);

  Vec apply(const Vec& x) const { return mat.apply(x); }
  GradedLinearMap compose(const GradedLinearMap& inner) const;

  /// Checks entries vanish outside the declared graded band.
  Verdict check_degree() const;
  /// Smallest consistent homogeneous degree of the matrix, if any.
  std::optional<GroupElem> infer_degree() const;
};

/// Tr_ε(f) = Tr(E∘f); vanishes on homogeneous maps of nonzero degree.
Scalar eps_trace(const GradedLinearMap& f);
Scalar eps_trace(const GradedSpace& v, const Matrix& endo);

/// ε-symmetric bilinear form of degree 0, given by its Gram matrix.
struct FormEps {
  GradedSpace space;
  Matrix gram;

  /// degree 0, ε-symmetric, non-degenerate; witnesses carry indices.
  Verdict validate() const;

  const Scalar& eval(int i, int j) const { return gram.at(i, j); }
  Scalar eval(const Vec& x, const Vec& y) const;

  /// Dual basis vectors e^j with B(e_i, e^j) = δ_ij (δ in the second
  /// slot), expanded in the original basis. Throws if singular.
  std::vector<Vec> dual_basis() const;

  /// Restrictions to the even and odd parts together with the index sets.
  /// Throws if the cross block is nonzero.
  std::pair<FormEps, FormEps> split() const;

  FormEps scaled(const Scalar& c) const { return FormEps{space, gram.scaled(c)}; }
};

FormEps form_tensor(const FormEps& bv, const FormEps& bw);
FormEps form_dsum(const FormEps& bv, const FormEps& bw);

}  // namespace cla
