#pragma once

#include <random>

#include "cla/colour_lie.hpp"
#include "cla/graded_space.hpp"
#include "cla/representation.hpp"

// Shared test fixtures: small graded spaces with valid forms, plus
// random generators used by the property tests.
namespace fx {

using namespace cla;

inline const FieldDescriptor Q = FieldDescriptor::rationals();
inline const FieldDescriptor F7 = FieldDescriptor::prime_field(7);

// Γ = Z_2 with the super sign
inline CommutationFactor super_z2(const FieldDescriptor& f = Q) {
  return CommutationFactor(AbelianGroup(0, {2}), f, {{Scalar::of_int(-1, f)}});
}

// Γ = Z with ε(1,1) = −1 (odd integer degrees)
inline CommutationFactor sign_z(const FieldDescriptor& f = Q) {
  return CommutationFactor(AbelianGroup(1, {}), f, {{Scalar::of_int(-1, f)}});
}

// the odd symplectic plane: basis (p, q), |p| = |q| = 1 in Z_2
inline GradedSpace odd_k2(const FieldDescriptor& f = Q) {
  CommutationFactor cf = super_z2(f);
  GroupElem odd = cf.group().element({1});
  return GradedSpace(f, cf, {{"p", odd}, {"q", odd}});
}

inline FormEps symplectic_form(const GradedSpace& v) {
  Matrix g(2, 2, v.field());
  g.at(0, 1) = Scalar::one(v.field());
  g.at(1, 0) = -Scalar::one(v.field());
  return FormEps{v, std::move(g)};
}

// purely even space of dimension n over Z_2 grading
inline GradedSpace even_space(int n, const FieldDescriptor& f = Q) {
  CommutationFactor cf = super_z2(f);
  std::vector<BasisVector> basis;
  for (int i = 0; i < n; ++i)
    basis.push_back({"u" + std::to_string(i), cf.group().zero()});
  return GradedSpace(f, cf, std::move(basis));
}

inline FormEps identity_form(const GradedSpace& v) {
  return FormEps{v, Matrix::identity(v.dim(), v.field())};
}

// even hyperbolic plane: gram [[0,1],[1,0]]
inline FormEps hyperbolic_form(const GradedSpace& v) {
  Matrix g(2, 2, v.field());
  g.at(0, 1) = Scalar::one(v.field());
  g.at(1, 0) = Scalar::one(v.field());
  return FormEps{v, std::move(g)};
}

struct SpaceWithForm {
  GradedSpace space;
  FormEps form;
};

inline Matrix random_invertible(std::mt19937_64& rng, int n,
                                const FieldDescriptor& f) {
  std::uniform_int_distribution<long> d(-3, 3);
  for (;;) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Scalar::of_int(d(rng), f);
    if (is_invertible(m)) return m;
  }
}

/// Random graded space of dimension in [min_dim, max_dim] with a valid
/// non-degenerate ε-symmetric degree-0 form, built by congruence from a
/// block-diagonal model (identity on the even part, symplectic pairs on
/// the odd part).
inline SpaceWithForm random_space_with_form(std::mt19937_64& rng,
                                            const FieldDescriptor& f,
                                            int min_dim = 2, int max_dim = 4) {
  std::uniform_int_distribution<int> coin(0, 1);
  int n_even, odd_pairs;
  do {
    n_even = std::uniform_int_distribution<int>(0, max_dim)(rng);
    odd_pairs = std::uniform_int_distribution<int>(0, max_dim / 2)(rng);
  } while (n_even + 2 * odd_pairs < min_dim ||
           n_even + 2 * odd_pairs > max_dim);
  bool use_z = coin(rng) == 1;
  CommutationFactor cf = use_z ? sign_z(f) : super_z2(f);
  const AbelianGroup& grp = cf.group();
  std::vector<BasisVector> basis;
  for (int i = 0; i < n_even; ++i)
    basis.push_back({"u" + std::to_string(i), grp.zero()});
  for (int i = 0; i < odd_pairs; ++i) {
    basis.push_back({"p" + std::to_string(i), grp.element({1})});
    basis.push_back(
        {"q" + std::to_string(i), use_z ? grp.element({-1}) : grp.element({1})});
  }
  GradedSpace space(f, cf, std::move(basis));
  Matrix gram(space.dim(), space.dim(), f);
  Matrix pe = random_invertible(rng, n_even, f);
  for (int i = 0; i < n_even; ++i)
    for (int j = 0; j < n_even; ++j) {
      Scalar s = Scalar::zero(f);
      for (int k = 0; k < n_even; ++k) s += pe.at(k, i) * pe.at(k, j);
      gram.at(i, j) = std::move(s);
    }
  // odd block: congruent image of the standard symplectic form. For the
  // Z-grading the change of basis must preserve degrees, so it stays
  // block diagonal over the (p_i, q_i) pairs there.
  int no = 2 * odd_pairs;
  if (no > 0) {
    Matrix model(no, no, f);
    for (int i = 0; i < odd_pairs; ++i) {
      model.at(2 * i, 2 * i + 1) = Scalar::one(f);
      model.at(2 * i + 1, 2 * i) = -Scalar::one(f);
    }
    Matrix po(no, no, f);
    if (use_z) {
      std::uniform_int_distribution<long> d(1, 3);
      for (int i = 0; i < no; ++i) po.at(i, i) = Scalar::of_int(d(rng), f);
    } else {
      po = random_invertible(rng, no, f);
    }
    for (int i = 0; i < no; ++i)
      for (int j = 0; j < no; ++j) {
        Scalar s = Scalar::zero(f);
        for (int k = 0; k < no; ++k)
          for (int l = 0; l < no; ++l)
            s += po.at(k, i) * model.at(k, l) * po.at(l, j);
        gram.at(n_even + i, n_even + j) = std::move(s);
      }
  }
  return SpaceWithForm{space, FormEps{space, std::move(gram)}};
}

// representation of the zero algebra g = {0} on (V, form)
inline OrthRep zero_algebra_rep(const GradedSpace& v, const FormEps& form) {
  GradedSpace zero(v.field(), v.cf(), {});
  ColourLieAlgebra g(zero, {},
                     FormEps{zero, Matrix(0, 0, v.field())});
  return OrthRep{std::move(g), v, form, {}};
}

// V = sl(2) as an even 3-space with (a multiple of) the Killing form,
// acted on by g = {0}; φ = the sl(2) bracket. The classic φ-extension.
struct KillingFixture {
  OrthRep rep;
  AltMap phi;
};
inline KillingFixture sl2_killing_fixture(const FieldDescriptor& f = Q) {
  CommutationFactor cf = super_z2(f);
  GroupElem z = cf.group().zero();
  GradedSpace v(f, cf, {{"E", z}, {"H", z}, {"F", z}});
  // κ(E,F) = 4, κ(H,H) = 8 in the basis (E,H,F)
  Matrix gram(3, 3, f);
  gram.at(0, 2) = Scalar::of_int(4, f);
  gram.at(2, 0) = Scalar::of_int(4, f);
  gram.at(1, 1) = Scalar::of_int(8, f);
  FormEps kappa{v, std::move(gram)};
  OrthRep rep = zero_algebra_rep(v, kappa);
  // [E,H] = −2E, [E,F] = H, [H,F] = −2F
  auto bracket = [&](const std::vector<int>& t) {
    Vec val = vec_zero(3, f);
    int a = t[0], b = t[1];
    if (a == 0 && b == 1) val[0] = Scalar::of_int(-2, f);
    if (a == 0 && b == 2) val[1] = Scalar::one(f);
    if (a == 1 && b == 2) val[2] = Scalar::of_int(-2, f);
    return val;
  };
  AltMap phi = AltMap::from_function(v, v, 2, bracket);
  return {std::move(rep), std::move(phi)};
}

// g = 1-dim even abelian with B(h,h) = 1 acting on the odd symplectic
// plane by h·p = p, h·q = −q. Valid but not special.
inline OrthRep abelian_h_rep(const FieldDescriptor& f = Q) {
  GradedSpace v = odd_k2(f);
  CommutationFactor cf = v.cf();
  GradedSpace g(f, cf, {{"h", cf.group().zero()}});
  std::vector<std::vector<Vec>> br(1, std::vector<Vec>(1, vec_zero(1, f)));
  ColourLieAlgebra alg(g, std::move(br),
                       FormEps{g, Matrix::identity(1, f)});
  Matrix h(2, 2, f);
  h.at(0, 0) = Scalar::one(f);
  h.at(1, 1) = -Scalar::one(f);
  return OrthRep{std::move(alg), v, symplectic_form(v), {std::move(h)}};
}

// φ on the odd plane from the cubic x³: ω(φ(u,v), w) = T(u,v,w) with T
// the polarization. Violates the degree-0 requirement by construction
// (no nonzero degree-0 φ exists on a purely odd space).
inline AltMap cubic_phi_x3(const GradedSpace& v) {
  const FieldDescriptor& f = v.field();
  auto fn = [&](const std::vector<int>& t) {
    Vec val = vec_zero(2, f);
    if (t[0] == 0 && t[1] == 0) val[1] = -Scalar::one(f);  // φ(p,p) = −q
    return val;
  };
  return AltMap::from_function(v, v, 2, fn);
}

// same for x³+y³; its assembled bracket genuinely breaks Jacobi
inline AltMap cubic_phi_x3y3(const GradedSpace& v) {
  const FieldDescriptor& f = v.field();
  auto fn = [&](const std::vector<int>& t) {
    Vec val = vec_zero(2, f);
    if (t[0] == 0 && t[1] == 0) val[1] = -Scalar::one(f);  // φ(p,p) = −q
    if (t[0] == 1 && t[1] == 1) val[0] = Scalar::one(f);   // φ(q,q) = p
    return val;
  };
  return AltMap::from_function(v, v, 2, fn);
}

// g = {0} on even k⁵ with the identity form; φ from the alternating
// 3-form e*1∧e*2∧e*3 + e*1∧e*4∧e*5. Valid φ whose bracket fails Jacobi,
// so all three extension verdicts fail together.
struct ThreeFormFixture {
  OrthRep rep;
  AltMap phi;
};
inline ThreeFormFixture three_form_k5_fixture(const FieldDescriptor& f = Q) {
  GradedSpace v = even_space(5, f);
  FormEps b = identity_form(v);
  OrthRep rep = zero_algebra_rep(v, b);
  auto det_sign = [](int a, int b2, int c, int x, int y, int z) -> long {
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                            {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const long sg[6] = {1, 1, 1, -1, -1, -1};
    int in[3] = {a, b2, c};
    for (int k = 0; k < 6; ++k)
      if (in[perm[k][0]] == x && in[perm[k][1]] == y && in[perm[k][2]] == z)
        return sg[k];
    return 0;
  };
  auto fn = [&](const std::vector<int>& t) {
    Vec val = vec_zero(5, f);
    for (int w = 0; w < 5; ++w)
      val[w] = Scalar::of_int(det_sign(t[0], t[1], w, 0, 1, 2) +
                                  det_sign(t[0], t[1], w, 0, 3, 4),
                              f);
    return val;
  };
  AltMap phi = AltMap::from_function(v, v, 2, fn);
  return {std::move(rep), std::move(phi)};
}

}  // namespace fx
