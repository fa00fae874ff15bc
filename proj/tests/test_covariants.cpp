#include <random>

#include "cla/catalog.hpp"
#include "cla/covariants.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cla;
using namespace fx;

namespace {
// so_tensor_sl2 on the even hyperbolic plane: V⊗W is 4-dim, purely odd
OrthRep hyperbolic_tensor_rep(const FieldDescriptor& f = Q) {
  GradedSpace v = even_space(2, f);
  CommutationFactor cf = v.cf();
  return catalog_so_tensor_sl2(v, hyperbolic_form(v), cf.group().element({1}));
}
}  // namespace

TEST_CASE("covariants of the fundamental representation vanish") {
  std::mt19937_64 rng(7001);
  for (int it = 0; it < 5; ++it) {
    auto sf = random_space_with_form(rng, Q, 2, 4);
    OrthRep rep = catalog_fundamental_so(sf.space, sf.form);
    Covariants cov = covariants(rep);
    CHECK(cov.psi.is_zero());
    CHECK(cov.q.is_zero());
  }
}

TEST_CASE("psi and Q redundant formulas agree on a non-special rep too") {
  // the internal cross-checks (3-term vs symmetrized) hold for any rep
  OrthRep rep = abelian_h_rep();
  AltMap psi = covariant_psi(rep);
  AltMap q = covariant_q(rep);
  CHECK(!psi.is_zero());
  CHECK(psi.inferred_degree().has_value());
}

TEST_CASE("tensor-family covariant Q: zero patterns and the hyperbolic value 12") {
  OrthRep rep = hyperbolic_tensor_rep();
  REQUIRE(rep.validate().pass);
  REQUIRE(is_special(rep).pass);
  Covariants cov = covariants(rep);

  const GradedSpace& t = rep.space;  // u0⊗p, u0⊗q, u1⊗p, u1⊗q
  REQUIRE(t.dim() == 4);
  int up[2] = {t.index_of("u0⊗p"), t.index_of("u1⊗p")};
  int uq[2] = {t.index_of("u0⊗q"), t.index_of("u1⊗q")};
  REQUIRE(up[0] >= 0);
  REQUIRE(uq[0] >= 0);

  // Q(v1⊗p, v2⊗p, v3⊗p, v4⊗p) = 0 and one q makes no difference
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          CHECK(cov.q.eval({up[a], up[b], up[c], up[d]})[0].is_zero());
          CHECK(cov.q.eval({uq[a], uq[b], uq[c], uq[d]})[0].is_zero());
          CHECK(cov.q.eval({up[a], up[b], up[c], uq[d]})[0].is_zero());
          CHECK(cov.q.eval({up[a], uq[b], uq[c], uq[d]})[0].is_zero());
        }

  // closed form on even V: Q(v1⊗p,v2⊗p,v3⊗q,v4⊗q)
  //   = 24(v1,v2)(v3,v4) − 12(v1,v3)(v2,v4) − 12(v2,v3)(v1,v4)
  GradedSpace v2 = even_space(2);
  FormEps bv = hyperbolic_form(v2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Scalar want = Scalar::of_int(24, Q) * bv.eval(a, b) * bv.eval(c, d) -
                        Scalar::of_int(12, Q) * bv.eval(a, c) * bv.eval(b, d) -
                        Scalar::of_int(12, Q) * bv.eval(b, c) * bv.eval(a, d);
          CHECK(cov.q.eval({up[a], up[b], uq[c], uq[d]})[0] == want);
        }
  // the headline value
  CHECK(cov.q.eval({up[0], up[1], uq[0], uq[1]})[0] == Scalar::of_int(12, Q));
}

TEST_CASE("Mathews identities a and b in full mode on the hyperbolic tensor fixture") {
  OrthRep rep = hyperbolic_tensor_rep();
  Covariants cov = covariants(rep);
  MathewsMode full;
  CHECK(mathews_verify(rep, cov, 'a', full).pass);
  CHECK(mathews_verify(rep, cov, 'b', full).pass);
}

TEST_CASE("Mathews identity c in full and sampled modes") {
  OrthRep rep = hyperbolic_tensor_rep();
  Covariants cov = covariants(rep);
  MathewsMode full;
  CHECK(mathews_verify(rep, cov, 'c', full).pass);
  MathewsMode sampled;
  sampled.full = false;
  sampled.samples = 4;
  sampled.seed = 42;
  CHECK(mathews_verify(rep, cov, 'c', sampled).pass);
  // reference strategy agrees on a couple of sampled tuples
  MathewsMode tiny;
  tiny.full = false;
  tiny.samples = 2;
  tiny.seed = 7;
  CHECK(mathews_verify(rep, cov, 'c', tiny, EvalStrategy::reference).pass);
}

TEST_CASE("Mathews identities hold over a prime field as well") {
  OrthRep rep = hyperbolic_tensor_rep(F7);
  Covariants cov = covariants(rep);
  MathewsMode full;
  CHECK(mathews_verify(rep, cov, 'a', full).pass);
  CHECK(mathews_verify(rep, cov, 'b', full).pass);
}

TEST_CASE("mathews_verify rejects non-special representations") {
  OrthRep rep = abelian_h_rep();
  MathewsMode full;
  CHECK_THROWS_AS(mathews_verify(rep, 'a', full), Error);
}

TEST_CASE("a perturbed moment map is caught") {
  OrthRep rep = hyperbolic_tensor_rep();
  AltMap mu = moment_map(rep);
  std::vector<Vec> vals;
  for (int row = 0; row < mu.table().size(); ++row)
    vals.push_back(mu.value(row));
  vals[0][0] += Scalar::one(Q);
  AltMap mutated(mu.domain(), mu.codomain(), 2, vals);
  // the specialness precheck fails, so the verifier refuses loudly
  Covariants cov = covariants_from(rep, mutated);
  MathewsMode full;
  CHECK_THROWS_AS(mathews_verify(rep, cov, 'a', full), Error);
}
