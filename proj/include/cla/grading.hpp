#pragma once

#include <vector>

#include "cla/scalar.hpp"
#include "cla/verdict.hpp"

namespace cla {

/// Group element of Z^r x Z_{m_1} x ... x Z_{m_t}, stored as a coordinate
/// vector with torsion coordinates reduced into [0, m_i).
struct GroupElem {
  std::vector<long> coords;

  bool is_zero() const {
    for (long c : coords)
      if (c) return false;
    return true;
  }
  bool operator==(const GroupElem&) const = default;
  std::string str() const;
};

/// Finitely generated abelian group in invariant-factor presentation.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long> torsion_orders;  // each >= 2

  AbelianGroup() = default;
  AbelianGroup(int rank, std::vector<long> torsion);

  int word_length() const {
    return free_rank + static_cast<int>(torsion_orders.size());
  }

  GroupElem zero() const;
  GroupElem element(std::vector<long> coords) const;  // canonicalizes torsion
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;

  bool operator==(const AbelianGroup&) const = default;
};

/// Commutation factor ε : Γ×Γ → k*, given by its values on generator
/// pairs and extended bimultiplicatively.
class CommutationFactor {
 public:
  CommutationFactor() = default;
  CommutationFactor(AbelianGroup group, FieldDescriptor field,
                    std::vector<std::vector<Scalar>> gen_values);

  /// Checks ε(a,b)ε(b,a)=1 on generators, ε(g,g)=±1, and torsion-order
  /// compatibility. Failure witnesses carry the violating pair.
  Verdict validate() const;

  Scalar eval(const GroupElem& a, const GroupElem& b) const;
  /// +1 if ε(a,a)=1, −1 if ε(a,a)=−1.
  int parity(const GroupElem& a) const;

  const AbelianGroup& group() const { return group_; }
  const FieldDescriptor& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& gen_values() const {
    return gen_values_;
  }

  bool operator==(const CommutationFactor& o) const;

 private:
  AbelianGroup group_;
  FieldDescriptor field_;
  std::vector<std::vector<Scalar>> gen_values_;
};

}  // namespace cla
