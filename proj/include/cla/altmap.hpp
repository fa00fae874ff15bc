#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cla/graded_space.hpp"
#include "cla/permutation.hpp"

namespace cla {

/// Canonical index tuples for Alt^n storage: non-decreasing, with an even
/// (parity +1) index appearing at most once. A repeated even index forces
/// the value 0 in characteristic != 2, so such tuples are never stored.
class TupleTable {
 public:
  TupleTable(const GradedSpace& space, int arity);

  int arity() const { return arity_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const std::vector<int>& tuple(int row) const { return tuples_[row]; }
  int find(const std::vector<int>& sorted_tuple) const;  // -1 if absent

  /// 5 bits per slot; requires dim <= 31 and arity <= 12.
  static std::uint64_t pack(const int* idx, int n);

 private:
  int arity_;
  std::vector<std::vector<int>> tuples_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Element of Alt^n_ε(V, W), stored on canonical tuples.
class AltMap {
 public:
  AltMap() = default;
  AltMap(GradedSpace domain, GradedSpace codomain, int arity,
         std::vector<Vec> values);

  static AltMap zero(const GradedSpace& domain, const GradedSpace& codomain,
                     int arity);
  /// Builds from an evaluator on canonical tuples. With `validate` set the
  /// evaluator is also probed on swapped tuples and must satisfy the
  /// ε-alternating rule exactly.
  static AltMap from_function(
      const GradedSpace& domain, const GradedSpace& codomain, int arity,
      const std::function<Vec(const std::vector<int>&)>& fn,
      bool validate = false);
  /// Id_V as an element of Alt^1_ε(V, V).
  static AltMap identity_map(const GradedSpace& v);

  const GradedSpace& domain() const { return domain_; }
  const GradedSpace& codomain() const { return codomain_; }
  int arity() const { return arity_; }
  const TupleTable& table() const { return *table_; }
  const Vec& value(int row) const { return values_[row]; }
  const std::vector<Vec>& values() const { return values_; }

  /// Evaluation on an arbitrary basis tuple: sort with sign, then look up.
  Vec eval(const std::vector<int>& indices) const;
  /// Multilinear evaluation on coordinate vectors.
  Vec eval_multi(const std::vector<Vec>& args) const;

  bool is_zero() const;
  AltMap operator+(const AltMap& o) const;
  AltMap operator-(const AltMap& o) const;
  AltMap scaled(const Scalar& c) const;
  bool operator==(const AltMap& o) const;

  /// Common δ with every stored value homogeneous of degree Σdeg + δ;
  /// nullopt for the zero map or when no single δ fits.
  std::optional<GroupElem> inferred_degree() const;
  bool is_degree_zero() const;

 private:
  GradedSpace domain_, codomain_;
  int arity_ = 0;
  std::shared_ptr<const TupleTable> table_;
  std::vector<Vec> values_;
};

/// Bilinear pairing φ : A×B → C on basis pairs, the glue of ∧_φ.
struct Pairing {
  GradedSpace a, b, out;
  std::vector<std::vector<Vec>> table;  // table[i][j] = φ(a_i, b_j) in C

  static Pairing build(const GradedSpace& a, const GradedSpace& b,
                       const GradedSpace& out,
                       const std::function<Vec(int, int)>& fn);
  /// B : V×V → k as a pairing into the scalar line.
  static Pairing from_form(const FormEps& form);
  /// k×V → V, scalar multiplication.
  static Pairing scalar_mult(const GradedSpace& v);
  /// k×k → k, field multiplication.
  static Pairing field_mult(const FieldDescriptor& f,
                            const CommutationFactor& cf);

  Vec apply(const Vec& x, const Vec& y) const;
};

/// `fast` uses incremental shuffle signs, term memoization and parallel
/// tuple loops; `reference` is the direct sum over shuffles with p-signs
/// computed from the closed formula, kept as a serial cross-check.
enum class EvalStrategy { reference, fast };

AltMap wedge(const AltMap& f, const AltMap& g, const Pairing& phi,
             EvalStrategy strategy = EvalStrategy::fast);

/// N_φ(f) = f ∧_φ f.
AltMap alt_norm(const AltMap& f, const Pairing& phi,
                EvalStrategy strategy = EvalStrategy::fast);

/// Exterior composition: f ∈ Alt^i(U,X), g ∈ Alt^j(W,U) → Alt^{ij}(W,X).
AltMap exterior_compose(const AltMap& f, const AltMap& g,
                        EvalStrategy strategy = EvalStrategy::fast);

/// Single-tuple evaluation (arbitrary tuple), used by sampled modes.
Vec wedge_eval(const AltMap& f, const AltMap& g, const Pairing& phi,
               const std::vector<int>& tuple,
               EvalStrategy strategy = EvalStrategy::fast);
Vec compose_eval(const AltMap& f, const AltMap& g,
                 const std::vector<int>& tuple,
                 EvalStrategy strategy = EvalStrategy::fast);

}  // namespace cla
