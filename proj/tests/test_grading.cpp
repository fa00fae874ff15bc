#include <random>

#include "cla/grading.hpp"
#include "doctest.h"

using namespace cla;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();

// Γ = Z_2 with the super sign ε(a,b) = (−1)^{ab}
CommutationFactor super_z2(const FieldDescriptor& f = Q) {
  AbelianGroup g(0, {2});
  return CommutationFactor(g, f, {{Scalar::of_int(-1, f)}});
}

GroupElem random_elem(std::mt19937_64& rng, const AbelianGroup& g) {
  std::uniform_int_distribution<long> d(-6, 6);
  std::vector<long> c(g.word_length());
  for (long& x : c) x = d(rng);
  return g.element(std::move(c));
}
}  // namespace

TEST_CASE("group element canonicalization") {
  AbelianGroup g(1, {2, 3});
  GroupElem e = g.element({-4, 5, -4});
  CHECK(e.coords == std::vector<long>{-4, 1, 2});
  CHECK(g.add(g.element({1, 1, 2}), g.element({2, 1, 2})).coords ==
        std::vector<long>{3, 0, 1});
  CHECK(g.neg(g.element({2, 1, 1})).coords == std::vector<long>{-2, 1, 2});
  CHECK_THROWS_AS(g.element({1, 2}), Error);
  CHECK_THROWS_AS(AbelianGroup(0, {1}), Error);
}

TEST_CASE("epsilon validation") {
  CHECK(super_z2().validate().pass);

  // Γ=Z_2, E=[[2]] over Q: violates ε(a,b)ε(b,a)=1 on the diagonal
  AbelianGroup z2(0, {2});
  CommutationFactor bad(z2, Q, {{Scalar::of_int(2, Q)}});
  Verdict v = bad.validate();
  CHECK(!v.pass);

  // Γ=Z×Z_2 with E=[[−1,1],[1,−1]]
  AbelianGroup zxz2(1, {2});
  Scalar one = Scalar::one(Q), minus = Scalar::of_int(-1, Q);
  CommutationFactor mixed(zxz2, Q, {{minus, one}, {one, minus}});
  CHECK(mixed.validate().pass);

  // torsion-order incompatibility: ε(free, torsion) = 2 fails 2^2 = 1
  CommutationFactor badtors(zxz2, Q,
                            {{minus, Scalar::of_int(2, Q)},
                             {Scalar::parse("1/2", Q), minus}});
  CHECK(!badtors.validate().pass);

  // shape mismatch
  CHECK_THROWS_AS(CommutationFactor(zxz2, Q, {{one}}), Error);
}

TEST_CASE("epsilon evaluation") {
  CommutationFactor cf = super_z2();
  const AbelianGroup& g = cf.group();
  CHECK(cf.eval(g.element({1}), g.element({1})) == Scalar::of_int(-1, Q));
  CHECK(cf.eval(g.element({1}), g.element({0})) == Scalar::one(Q));
  CHECK(cf.eval(g.element({0}), g.element({1})) == Scalar::one(Q));

  // Z free rank 1 with E=[[−1]]: ε(2,3) = (−1)^6 = 1
  AbelianGroup z(1, {});
  CommutationFactor zf(z, Q, {{Scalar::of_int(-1, Q)}});
  CHECK(zf.eval(z.element({2}), z.element({3})) == Scalar::one(Q));
  CHECK(zf.eval(z.element({1}), z.element({3})) == Scalar::of_int(-1, Q));
}

TEST_CASE("parity") {
  CommutationFactor cf = super_z2();
  const AbelianGroup& g = cf.group();
  CHECK(cf.parity(g.element({0})) == 1);
  CHECK(cf.parity(g.element({1})) == -1);

  // parity is a homomorphism to {±1}
  std::mt19937_64 rng(7);
  AbelianGroup zxz2(1, {2});
  Scalar one = Scalar::one(Q), minus = Scalar::of_int(-1, Q);
  CommutationFactor mixed(zxz2, Q, {{minus, one}, {one, minus}});
  for (int it = 0; it < 100; ++it) {
    GroupElem a = random_elem(rng, zxz2), b = random_elem(rng, zxz2);
    CHECK(mixed.parity(zxz2.add(a, b)) == mixed.parity(a) * mixed.parity(b));
  }
}

TEST_CASE("bimultiplicativity and the inverse rule on random pairs") {
  std::mt19937_64 rng(11);
  // a non-sign commutation factor: Γ = Z^2 with ε(g1,g2)=2
  AbelianGroup z2free(2, {});
  Scalar one = Scalar::one(Q);
  CommutationFactor cf(z2free, Q,
                       {{one, Scalar::of_int(2, Q)},
                        {Scalar::parse("1/2", Q), one}});
  REQUIRE(cf.validate().pass);
  for (int it = 0; it < 100; ++it) {
    GroupElem a = random_elem(rng, z2free), b = random_elem(rng, z2free),
              c = random_elem(rng, z2free);
    CHECK(cf.eval(a, b) * cf.eval(b, a) == one);
    CHECK(cf.eval(z2free.add(a, b), c) == cf.eval(a, c) * cf.eval(b, c));
    CHECK(cf.eval(a, z2free.add(b, c)) == cf.eval(a, b) * cf.eval(a, c));
    CHECK(cf.eval(a, z2free.neg(b)) == cf.eval(b, a));
    CHECK(cf.eval(a, z2free.zero()) == one);
  }
}
