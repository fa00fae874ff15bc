#include <algorithm>
#include <random>
#include <set>

#include "cla/permutation.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cla;
using namespace fx;

namespace {
std::vector<GroupElem> random_degrees(std::mt19937_64& rng,
                                      const AbelianGroup& g, int n) {
  std::uniform_int_distribution<long> d(-2, 2);
  std::vector<GroupElem> out;
  for (int i = 0; i < n; ++i) {
    std::vector<long> c(g.word_length());
    for (long& x : c) x = d(rng);
    out.push_back(g.element(std::move(c)));
  }
  return out;
}
}  // namespace

TEST_CASE("p_sign basics") {
  CommutationFactor cf = super_z2();
  GroupElem odd = cf.group().element({1});

  // p(Id) = 1
  std::vector<GroupElem> degs = {odd, odd, odd};
  CHECK(p_sign({0, 1, 2}, degs, cf) == Scalar::one(Q));

  // adjacent transposition on two odd elements: −ε(v1,v2) = 1
  CHECK(p_sign({1, 0}, {odd, odd}, cf) == Scalar::one(Q));
  // and on an even pair: −1
  GroupElem ev = cf.group().zero();
  CHECK(p_sign({1, 0}, {ev, ev}, cf) == Scalar::of_int(-1, Q));
}

TEST_CASE("p_sign composition law on random inputs") {
  std::mt19937_64 rng(1234);
  CommutationFactor cf = sign_z();
  for (int it = 0; it < 50; ++it) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    auto degs = random_degrees(rng, cf.group(), n);
    auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    const Perm& sigma = perms[pick(rng)];
    const Perm& sigmap = perms[pick(rng)];
    // p(σσ'; v) = p(σ'; v_{σ(1)},...) p(σ; v)
    Perm prod = perm_compose(sigma, sigmap);
    std::vector<GroupElem> permuted;
    for (int i = 0; i < n; ++i) permuted.push_back(degs[sigma[i]]);
    CHECK(p_sign(prod, degs, cf) ==
          p_sign(sigmap, permuted, cf) * p_sign(sigma, degs, cf));
  }
}

TEST_CASE("shuffle enumeration matches the listed S({1,2},{3,4})") {
  // {id,(123),(1243),(23),(13)(24),(243)} as 0-based image vectors
  std::set<Perm> expected = {{0, 1, 2, 3}, {1, 2, 0, 3}, {1, 3, 0, 2},
                             {0, 2, 1, 3}, {2, 3, 0, 1}, {0, 3, 1, 2}};
  std::set<Perm> got;
  for_each_shuffle({2, 2}, [&](const Perm& s) { got.insert(s); });
  CHECK(got == expected);
  CHECK(shuffle_count({2, 2}) == 6);
}

TEST_CASE("shuffle counts match the binomial product") {
  CHECK(shuffle_count({3, 3, 3, 3}) == 369600);
  CHECK(shuffle_count({5}) == 1);
  std::vector<int> single = {4};
  int count = 0;
  for_each_shuffle(single, [&](const Perm& s) {
    ++count;
    CHECK(s == Perm{0, 1, 2, 3});
  });
  CHECK(count == 1);

  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    int m = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> sizes;
    int n = 0;
    for (int b = 0; b < m; ++b) {
      int s = std::uniform_int_distribution<int>(1, 3)(rng);
      if (n + s > 10) break;
      sizes.push_back(s);
      n += s;
    }
    if (sizes.empty()) continue;
    std::size_t count2 = 0;
    std::set<Perm> seen;
    for_each_shuffle(sizes, [&](const Perm& s) {
      ++count2;
      seen.insert(s);
      // σ increasing on each block
      int off = 0;
      for (int sz : sizes) {
        for (int k = 1; k < sz; ++k) CHECK(s[off + k - 1] < s[off + k]);
        off += sz;
      }
    });
    CHECK(count2 == shuffle_count(sizes));
    CHECK(seen.size() == count2);  // each exactly once
  }
}

TEST_CASE("shuffle factorization: |S_n| = shuffles × product of block factorials") {
  auto factorial = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  for (std::vector<int> sizes :
       {std::vector<int>{2, 2}, {1, 3}, {2, 3}, {2, 2, 2}, {3, 3, 2}}) {
    int n = 0;
    std::uint64_t prod = 1;
    for (int s : sizes) {
      n += s;
      prod *= factorial(s);
    }
    CHECK(shuffle_count(sizes) * prod == factorial(n));
  }
}

TEST_CASE("p_sign factors over disjoint-support blocks") {
  std::mt19937_64 rng(31337);
  CommutationFactor cf = super_z2();
  for (int it = 0; it < 30; ++it) {
    auto degs = random_degrees(rng, cf.group(), 6);
    auto p3 = all_permutations(3);
    std::uniform_int_distribution<std::size_t> pick(0, p3.size() - 1);
    Perm a = p3[pick(rng)], b = p3[pick(rng)];
    Perm joint(6);
    for (int i = 0; i < 3; ++i) {
      joint[i] = a[i];
      joint[3 + i] = 3 + b[i];
    }
    std::vector<GroupElem> left(degs.begin(), degs.begin() + 3);
    std::vector<GroupElem> right(degs.begin() + 3, degs.end());
    CHECK(p_sign(joint, degs, cf) ==
          p_sign(a, left, cf) * p_sign(b, right, cf));
  }
}

TEST_CASE("sort_with_sign") {
  GradedSpace v = odd_k2();
  // already sorted
  auto [t1, s1] = sort_with_sign({0, 1}, v);
  CHECK(t1 == std::vector<int>{0, 1});
  CHECK(s1 == Scalar::one(Q));

  // (q,p): one adjacent swap, −ε(odd,odd) = 1
  auto [t2, s2] = sort_with_sign({1, 0}, v);
  CHECK(t2 == std::vector<int>{0, 1});
  CHECK(s2 == Scalar::one(Q));

  // full reversal of 3 distinct odd indices: 3 swaps, (+1)^3 = 1
  CommutationFactor cf = super_z2();
  GroupElem odd = cf.group().element({1});
  GradedSpace w(Q, cf, {{"a", odd}, {"b", odd}, {"c", odd}});
  auto [t3, s3] = sort_with_sign({2, 1, 0}, w);
  CHECK(t3 == std::vector<int>{0, 1, 2});
  CHECK(s3 == Scalar::one(Q));

  // even indices: reversal of 2 gives −1
  GradedSpace e2 = even_space(2);
  auto [t4, s4] = sort_with_sign({1, 0}, e2);
  CHECK(s4 == Scalar::of_int(-1, Q));

  // consistency with p_sign: f(v) = p(σ; v) f(v_σ) where v_σ is sorted
  std::mt19937_64 rng(55);
  for (int it = 0; it < 50; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 4);
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    std::vector<int> tuple;
    std::uniform_int_distribution<int> pick(0, sf.space.dim() - 1);
    for (int i = 0; i < n; ++i) tuple.push_back(pick(rng));
    auto [sorted, sign] = sort_with_sign(tuple, sf.space);
    // find a permutation σ with tuple[σ(k)] = sorted[k], stably
    Perm sigma(n);
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (!used[j] && tuple[j] == sorted[k]) {
          sigma[k] = j;
          used[j] = true;
          break;
        }
    std::vector<GroupElem> degs;
    for (int i : tuple) degs.push_back(sf.space.degree(i));
    // p(σ⁻¹?;...) — sign relates f(tuple) = sign·f(sorted); p-sign relates
    // f(tuple) = p(σ; tuple-degrees)·f(tuple∘σ) with tuple∘σ = sorted
    CHECK(sign == p_sign(sigma, degs, sf.space.cf()));
  }
}
