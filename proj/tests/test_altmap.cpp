#include <random>

#include "cla/altmap.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cla;
using namespace fx;

namespace {

AltMap random_scalar_altmap(std::mt19937_64& rng, const GradedSpace& v,
                            int arity) {
  GradedSpace line = GradedSpace::scalar_line(v.field(), v.cf());
  std::uniform_int_distribution<long> d(-3, 3);
  return AltMap::from_function(v, line, arity, [&](const std::vector<int>&) {
    return Vec{Scalar::of_int(d(rng), v.field())};
  });
}

AltMap random_vector_altmap(std::mt19937_64& rng, const GradedSpace& v,
                            int arity) {
  std::uniform_int_distribution<long> d(-3, 3);
  return AltMap::from_function(v, v, arity, [&](const std::vector<int>&) {
    Vec out;
    for (int i = 0; i < v.dim(); ++i)
      out.push_back(Scalar::of_int(d(rng), v.field()));
    return out;
  });
}

}  // namespace

TEST_CASE("canonical tuple storage") {
  // purely odd dim 4 at arity 12: C(15,12) = 455 canonical tuples
  CommutationFactor cf = super_z2();
  GroupElem odd = cf.group().element({1});
  GradedSpace v(Q, cf, {{"a", odd}, {"b", odd}, {"c", odd}, {"d", odd}});
  TupleTable t(v, 12);
  CHECK(t.size() == 455);

  // even indices never repeat
  GradedSpace e3 = even_space(3);
  TupleTable t2(e3, 2);
  CHECK(t2.size() == 3);  // (0,1),(0,2),(1,2)

  TupleTable t3(e3, 4);
  CHECK(t3.size() == 0);  // no 4-subsets of a 3-element set
}

TEST_CASE("alt map evaluation follows the adjacent-swap rule") {
  std::mt19937_64 rng(321);
  for (int it = 0; it < 25; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 4);
    const GradedSpace& v = sf.space;
    int arity = std::uniform_int_distribution<int>(2, 3)(rng);
    AltMap f = random_vector_altmap(rng, v, arity);
    std::uniform_int_distribution<int> pick(0, v.dim() - 1);
    std::vector<int> tuple;
    for (int i = 0; i < arity; ++i) tuple.push_back(pick(rng));
    int l = std::uniform_int_distribution<int>(0, arity - 2)(rng);
    std::vector<int> swapped = tuple;
    std::swap(swapped[l], swapped[l + 1]);
    CHECK(f.eval(tuple) ==
          vec_scale(-v.eps(tuple[l], tuple[l + 1]), f.eval(swapped)));
    // repeated even index kills the value
    std::vector<int> rep = tuple;
    if (v.parity(tuple[0]) > 0) {
      rep[1] = rep[0];
      CHECK(vec_is_zero(f.eval(rep)));
    }
  }
}

TEST_CASE("from_function validation catches a non-alternating evaluator") {
  GradedSpace e2 = even_space(2);
  // constant nonzero evaluator is not alternating on an even space
  auto bad = [&](const std::vector<int>&) {
    return Vec{Scalar::one(Q), Scalar::zero(Q)};
  };
  CHECK_THROWS_AS(AltMap::from_function(e2, e2, 2, bad, true), Error);
  // zero evaluator passes
  auto zero = [&](const std::vector<int>&) { return vec_zero(2, Q); };
  CHECK(AltMap::from_function(e2, e2, 2, zero, true).is_zero());
}

TEST_CASE("wedge of 1-forms on an even plane is the determinant") {
  GradedSpace e2 = even_space(2);
  GradedSpace line = GradedSpace::scalar_line(Q, e2.cf());
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-5, 5);
  Vec a = {Scalar::of_int(d(rng), Q), Scalar::of_int(d(rng), Q)};
  Vec b = {Scalar::of_int(d(rng), Q), Scalar::of_int(d(rng), Q)};
  AltMap alpha = AltMap::from_function(
      e2, line, 1, [&](const std::vector<int>& t) { return Vec{a[t[0]]}; });
  AltMap beta = AltMap::from_function(
      e2, line, 1, [&](const std::vector<int>& t) { return Vec{b[t[0]]}; });
  AltMap w = wedge(alpha, beta, Pairing::field_mult(Q, e2.cf()));
  // (α∧β)(e1,e2) = α(e1)β(e2) − α(e2)β(e1)
  CHECK(w.eval({0, 1}) == Vec{a[0] * b[1] - a[1] * b[0]});
}

TEST_CASE("fast and reference strategies agree") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 12; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 3);
    const GradedSpace& v = sf.space;
    AltMap f = random_scalar_altmap(rng, v, 2);
    AltMap g = random_vector_altmap(rng, v, 2);
    Pairing mult = Pairing::scalar_mult(v);
    CHECK(wedge(f, g, mult, EvalStrategy::fast) ==
          wedge(f, g, mult, EvalStrategy::reference));
    AltMap h = random_vector_altmap(rng, v, 2);
    CHECK(exterior_compose(g, h, EvalStrategy::fast) ==
          exterior_compose(g, h, EvalStrategy::reference));
  }
}

TEST_CASE("full antisymmetrization equals i!j! times the wedge") {
  std::mt19937_64 rng(1001);
  for (int it = 0; it < 10; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 3);
    const GradedSpace& v = sf.space;
    int i = std::uniform_int_distribution<int>(1, 2)(rng);
    int j = std::uniform_int_distribution<int>(1, 2)(rng);
    AltMap f = random_scalar_altmap(rng, v, i);
    AltMap g = random_scalar_altmap(rng, v, j);
    Pairing mult = Pairing::field_mult(Q, v.cf());
    AltMap w = wedge(f, g, mult);
    // Σ_{σ∈S_{i+j}} p(σ;v)·(fg)_φ(v_σ) = i!·j!·(f∧g)(v)
    long fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    for (int k = 2; k <= j; ++k) fact *= k;
    for (int row = 0; row < w.table().size(); ++row) {
      const auto& tuple = w.table().tuple(row);
      std::vector<GroupElem> degs;
      for (int x : tuple) degs.push_back(v.degree(x));
      Vec total = vec_zero(1, Q);
      for (const Perm& sigma : all_permutations(i + j)) {
        std::vector<int> left, right;
        for (int k = 0; k < i; ++k) left.push_back(tuple[sigma[k]]);
        for (int k = i; k < i + j; ++k) right.push_back(tuple[sigma[k]]);
        Scalar sign = p_sign(sigma, degs, v.cf());
        vec_axpy(total, sign, mult.apply(f.eval(left), g.eval(right)));
      }
      CHECK(total == vec_scale(Scalar::of_int(fact, Q), w.value(row)));
    }
  }
}

TEST_CASE("full antisymmetrization equals (j!)^i times the composition") {
  std::mt19937_64 rng(2002);
  for (int it = 0; it < 6; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 3);
    const GradedSpace& v = sf.space;
    int i = 2, j = 2;
    AltMap f = random_scalar_altmap(rng, v, i);
    AltMap g = random_vector_altmap(rng, v, j);
    AltMap c = exterior_compose(f, g);
    long fact = 2;  // (2!)^2 = 4
    fact = 4;
    for (int row = 0; row < c.table().size(); ++row) {
      const auto& tuple = c.table().tuple(row);
      std::vector<GroupElem> degs;
      for (int x : tuple) degs.push_back(v.degree(x));
      Vec total = vec_zero(1, Q);
      for (const Perm& sigma : all_permutations(i * j)) {
        std::vector<Vec> blocks;
        for (int b = 0; b < i; ++b) {
          std::vector<int> blk;
          for (int k = 0; k < j; ++k) blk.push_back(tuple[sigma[b * j + k]]);
          blocks.push_back(g.eval(blk));
        }
        Scalar sign = p_sign(sigma, degs, v.cf());
        vec_axpy(total, sign, f.eval_multi(blocks));
      }
      CHECK(total == vec_scale(Scalar::of_int(fact, Q), c.value(row)));
    }
  }
}

TEST_CASE("wedge output is eps-alternating (evaluation on arbitrary tuples)") {
  std::mt19937_64 rng(3003);
  for (int it = 0; it < 10; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 4);
    const GradedSpace& v = sf.space;
    AltMap f = random_scalar_altmap(rng, v, 2);
    AltMap g = random_scalar_altmap(rng, v, 2);
    Pairing mult = Pairing::field_mult(Q, v.cf());
    AltMap w = wedge(f, g, mult);
    // reference evaluation on a random (generally non-canonical) tuple
    // agrees with the canonical value pulled back through the sign
    std::uniform_int_distribution<int> pick(0, v.dim() - 1);
    std::vector<int> tuple;
    for (int k = 0; k < 4; ++k) tuple.push_back(pick(rng));
    Vec direct = wedge_eval(f, g, mult, tuple, EvalStrategy::reference);
    CHECK(direct == w.eval(tuple));
    CHECK(direct == wedge_eval(f, g, mult, tuple, EvalStrategy::fast));
  }
}

TEST_CASE("wedge on Alt(V) is associative and eps-commutative") {
  std::mt19937_64 rng(4004);
  for (int it = 0; it < 8; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 3);
    const GradedSpace& v = sf.space;
    Pairing mult = Pairing::field_mult(Q, v.cf());
    int i = std::uniform_int_distribution<int>(1, 2)(rng);
    int j = std::uniform_int_distribution<int>(1, 2)(rng);
    AltMap f = random_scalar_altmap(rng, v, i);
    AltMap g = random_scalar_altmap(rng, v, j);
    AltMap h = random_scalar_altmap(rng, v, 1);
    CHECK(wedge(wedge(f, g, mult), h, mult) ==
          wedge(f, wedge(g, h, mult), mult));
    // f∧g = (−1)^{ij} ε(f,g) g∧f for homogeneous f, g
    auto df = f.inferred_degree();
    auto dg = g.inferred_degree();
    if (df && dg) {
      Scalar sign = v.cf().eval(*df, *dg);
      if ((i * j) % 2 == 1) sign = -sign;
      CHECK(wedge(f, g, mult) == wedge(g, f, mult).scaled(sign));
    }
  }
}

TEST_CASE("compose bookkeeping") {
  GradedSpace v = odd_k2();
  std::mt19937_64 rng(5005);
  AltMap f = random_vector_altmap(rng, v, 2);
  AltMap idv = AltMap::identity_map(v);
  // f∘Id = i!·f (sum over all of S_i for singleton blocks)
  CHECK(exterior_compose(f, idv) == f.scaled(Scalar::of_int(2, Q)));
  // arity-1 f composed with g: plain composition, shuffle set {id}
  AltMap f1 = random_vector_altmap(rng, v, 1);
  AltMap g = random_vector_altmap(rng, v, 3);
  AltMap c = exterior_compose(f1, g);
  CHECK(c.arity() == 3);
  for (int row = 0; row < c.table().size(); ++row)
    CHECK(c.value(row) == f1.eval_multi({g.value(row)}));
  // arity product: 2 × 3 → 6
  AltMap c2 = exterior_compose(f, g);
  CHECK(c2.arity() == 6);

  // zero map wedge
  GradedSpace line = GradedSpace::scalar_line(Q, v.cf());
  AltMap z = AltMap::zero(v, line, 2);
  CHECK(wedge(z, z, Pairing::field_mult(Q, v.cf())).is_zero());
}

TEST_CASE("degree inference") {
  GradedSpace v = odd_k2();
  AltMap idv = AltMap::identity_map(v);
  auto d = idv.inferred_degree();
  REQUIRE(d.has_value());
  CHECK(d->is_zero());
  CHECK(idv.is_degree_zero());
}
