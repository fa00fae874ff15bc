#include <random>

#include "cla/scalar.hpp"
#include "doctest.h"

using namespace cla;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F7 = FieldDescriptor::prime_field(7);

Scalar random_scalar(std::mt19937_64& rng, const FieldDescriptor& f) {
  std::uniform_int_distribution<long> num(-20, 20);
  if (f.kind == FieldKind::rational) {
    std::uniform_int_distribution<long> den(1, 12);
    return Scalar::of_fraction(num(rng), den(rng), f);
  }
  return Scalar::of_int(num(rng), f);
}
}  // namespace

TEST_CASE("field descriptor guards characteristic") {
  CHECK_THROWS_AS(FieldDescriptor::prime_field(2), Error);
  CHECK_THROWS_AS(FieldDescriptor::prime_field(3), Error);
  CHECK_THROWS_AS(FieldDescriptor::prime_field(6), Error);
  CHECK(FieldDescriptor::prime_field(5).p == 5);
  CHECK(FieldDescriptor::prime_field(101).p == 101);
}

TEST_CASE("scalar parse canonicalizes") {
  CHECK(Scalar::parse("3/6", Q).str() == "1/2");
  CHECK(Scalar::parse("-4/2", Q).str() == "-2");
  CHECK(Scalar::parse("-4/2", Q) == Scalar::of_int(-2, Q));
  CHECK(Scalar::parse("3", F7).str() == "3");
  CHECK(Scalar::parse("10", F7) == Scalar::of_int(3, F7));
  CHECK(Scalar::parse("-1", F7).str() == "6");
  CHECK(Scalar::parse("1/2", F7) == Scalar::of_int(4, F7));

  CHECK_THROWS_AS(Scalar::parse("", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("a/b", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/7", F7), Error);
  CHECK_THROWS_AS(Scalar::parse("2.5", Q), Error);
}

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar::parse("1/2", Q) + Scalar::parse("1/3", Q) ==
        Scalar::parse("5/6", Q));
  CHECK(Scalar::of_int(2, F7).inv() == Scalar::of_int(4, F7));
  CHECK(Scalar::of_int(-1, Q) * Scalar::of_int(-1, Q) == Scalar::of_int(1, Q));
  CHECK_THROWS_AS(Scalar::of_int(1, Q) / Scalar::zero(Q), Error);
  CHECK_THROWS_AS(Scalar::of_int(1, Q) + Scalar::of_int(1, F7), Error);
}

TEST_CASE("scalar pow") {
  CHECK(Scalar::of_int(-1, Q).pow(3) == Scalar::of_int(-1, Q));
  CHECK(Scalar::of_int(2, Q).pow(5) == Scalar::of_int(32, Q));
  // Fermat little theorem oracle: 3^6 mod 7
  long fermat = 1;
  for (int i = 0; i < 6; ++i) fermat = (fermat * 3) % 7;
  CHECK(Scalar::of_int(3, F7).pow(6) == Scalar::of_int(fermat, F7));
  CHECK(Scalar::parse("1/2", Q).pow(-2) == Scalar::of_int(4, Q));
  CHECK_THROWS_AS(Scalar::zero(Q).pow(-1), Error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (const auto& f : {Q, F7}) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f),
             c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
    }
  }
}

TEST_CASE("parse of format is the identity") {
  std::mt19937_64 rng(99);
  for (const auto& f : {Q, F7}) {
    for (int it = 0; it < 100; ++it) {
      Scalar a = random_scalar(rng, f);
      CHECK(Scalar::parse(a.str(), f) == a);
    }
  }
}
