#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cla/graded_space.hpp"

namespace cla {

/// Permutation as an image vector: sigma[i] = σ(i), 0-based.
using Perm = std::vector<int>;

bool is_permutation(const Perm& sigma);
Perm perm_compose(const Perm& sigma, const Perm& tau);  // (σ∘τ)(i) = σ(τ(i))
Perm perm_inverse(const Perm& sigma);

/// Multiplier p(σ; v_1..v_n) = sgn(σ) · ∏_{i<j, σ⁻¹(i)>σ⁻¹(j)} ε(v_i, v_j),
/// the scalar relating an ε-alternating map to its permuted arguments.
Scalar p_sign(const Perm& sigma, const std::vector<GroupElem>& degrees,
              const CommutationFactor& cf);

std::uint64_t shuffle_count(const std::vector<int>& block_sizes);

/// Streams the shuffle permutations S(I_1,...,I_m) for consecutive blocks
/// of the given sizes, each exactly once, in a deterministic order.
class ShuffleIter {
 public:
  explicit ShuffleIter(std::vector<int> block_sizes);
  /// Writes the next shuffle into `sigma`; false when exhausted.
  bool next(Perm& sigma);

 private:
  std::vector<int> sizes_;
  int n_ = 0;
  std::vector<int> assignment_;  // block of each position, or -1
  bool done_ = false;
  bool first_ = true;

  bool advance();
  void fill(Perm& sigma) const;
};

void for_each_shuffle(const std::vector<int>& block_sizes,
                      const std::function<void(const Perm&)>& fn);

/// Sorts a basis-index tuple into non-decreasing order, accumulating the
/// product of −ε(adjacent swap) factors: f(indices) = sign · f(sorted).
/// Equal indices are never swapped.
std::pair<std::vector<int>, Scalar> sort_with_sign(
    const std::vector<int>& indices, const GradedSpace& v);

std::vector<Perm> all_permutations(int n);

}  // namespace cla
