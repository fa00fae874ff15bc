#include "cla/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace cla {

bool is_permutation(const Perm& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_compose(const Perm& sigma, const Perm& tau) {
  if (sigma.size() != tau.size()) throw Error("permutation size mismatch");
  Perm r(sigma.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = sigma[tau[i]];
  return r;
}

Perm perm_inverse(const Perm& sigma) {
  Perm inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
  return inv;
}

Scalar p_sign(const Perm& sigma, const std::vector<GroupElem>& degrees,
              const CommutationFactor& cf) {
  const int n = static_cast<int>(sigma.size());
  if (degrees.size() != sigma.size())
    throw Error("p_sign: degree tuple length differs from permutation size");
  if (!is_permutation(sigma)) throw Error("p_sign: not a permutation");
  Perm inv = perm_inverse(sigma);
  int inversions = 0;
  Scalar prod = Scalar::one(cf.field());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (inv[i] > inv[j]) {
        ++inversions;
        prod *= cf.eval(degrees[i], degrees[j]);
      }
  return (inversions % 2 == 0) ? prod : -prod;
}

std::uint64_t shuffle_count(const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw Error("empty block list");
  int n = 0;
  for (int s : block_sizes) {
    if (s <= 0) throw Error("non-positive shuffle block size");
    n += s;
  }
  std::uint64_t count = 1;
  int remaining = n;
  for (std::size_t b = 0; b + 1 < block_sizes.size(); ++b) {
    // C(remaining, size_b)
    std::uint64_t c = 1;
    for (int i = 0; i < block_sizes[b]; ++i)
      c = c * static_cast<std::uint64_t>(remaining - i) / (i + 1);
    count *= c;
    remaining -= block_sizes[b];
  }
  return count;
}

ShuffleIter::ShuffleIter(std::vector<int> block_sizes)
    : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) throw Error("empty block list");
  for (int s : sizes_) {
    if (s <= 0) throw Error("non-positive shuffle block size");
    n_ += s;
  }
  assignment_.reserve(n_);
  for (std::size_t b = 0; b < sizes_.size(); ++b)
    assignment_.insert(assignment_.end(), sizes_[b], static_cast<int>(b));
}

bool ShuffleIter::advance() {
  return std::next_permutation(assignment_.begin(), assignment_.end());
}

void ShuffleIter::fill(Perm& sigma) const {
  sigma.assign(n_, 0);
  std::vector<int> slot(sizes_.size());
  int off = 0;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    slot[b] = off;
    off += sizes_[b];
  }
  for (int pos = 0; pos < n_; ++pos) sigma[slot[assignment_[pos]]++] = pos;
}

bool ShuffleIter::next(Perm& sigma) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    fill(sigma);
    return true;
  }
  if (!advance()) {
    done_ = true;
    return false;
  }
  fill(sigma);
  return true;
}

void for_each_shuffle(const std::vector<int>& block_sizes,
                      const std::function<void(const Perm&)>& fn) {
  ShuffleIter it(block_sizes);
  Perm sigma;
  while (it.next(sigma)) fn(sigma);
}

std::pair<std::vector<int>, Scalar> sort_with_sign(
    const std::vector<int>& indices, const GradedSpace& v) {
  std::vector<int> t = indices;
  Scalar sign = Scalar::one(v.field());
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::size_t k = i;
    while (k > 0 && t[k - 1] > t[k]) {
      sign *= -v.eps(t[k - 1], t[k]);
      std::swap(t[k - 1], t[k]);
      --k;
    }
  }
  return {std::move(t), std::move(sign)};
}

std::vector<Perm> all_permutations(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace cla
