#include "cla/catalog.hpp"

namespace cla {

namespace {

bool is_square(const Scalar& s, const FieldDescriptor& f) {
  if (f.kind == FieldKind::rational) {
    mpq_class q(s.str());
    q.canonicalize();
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
  }
  // Euler criterion
  return s.is_zero() || s.pow(static_cast<long>((f.p - 1) / 2)).is_one();
}

}  // namespace

OrthRep catalog_fundamental_so(const GradedSpace& v, const FormEps& b) {
  EndoAlgebra so = so_eps(v, b);
  return fundamental_rep(so, b);
}

OrthRep catalog_so_tensor_sl2(const GradedSpace& v, const FormEps& bv,
                              const GroupElem& gamma) {
  EndoAlgebra so_v = so_eps(v, bv, Scalar::of_fraction(1, 4, v.field()));
  Sl2Data sl2 = sl2_make(v.cf(), gamma);
  OrthRep rep_v = fundamental_rep(so_v, bv);
  OrthRep rep_w = fundamental_rep(sl2.so, sl2.omega);
  return rep_tensor(rep_v, rep_w);
}

OrthRep catalog_centralizer_j(const GradedSpace& v, const FormEps& b,
                              const Matrix& j, const Scalar& lambda) {
  const FieldDescriptor& f = v.field();
  const int d = v.dim();
  if (j.rows() != d || j.cols() != d)
    throw Error("centralizer_j: J shape mismatch");
  if (lambda.is_zero()) throw Error("centralizer_j: lambda must be nonzero");
  if (!is_square(lambda, f))
    throw Error("centralizer_j: lambda is not a square in the field "
                "(the quadratic-extension case is unsupported)");
  // J of degree 0
  GradedLinearMap jm = GradedLinearMap::from_matrix(v, v, j);
  if (jm.degree && !jm.degree->is_zero())
    throw Error("centralizer_j: J is not of degree 0");
  // J² = λ Id
  if (!(j * j == Matrix::identity(d, f).scaled(lambda)))
    throw Error("centralizer_j: J^2 != lambda Id");
  // J in so_ε(V, B): (J(v),w) + ε(0,v)(v,J(w)) = 0
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      Scalar s = Scalar::zero(f);
      for (int r = 0; r < d; ++r) {
        if (!j.at(r, a).is_zero()) s += j.at(r, a) * b.gram.at(r, c);
        if (!j.at(r, c).is_zero()) s += b.gram.at(a, r) * j.at(r, c);
      }
      if (!s.is_zero()) throw Error("centralizer_j: J is not in so_eps(V, B)");
    }
  // dim(V_0) ≢ dim(V_1) mod char(k)
  long n0 = 0, n1 = 0;
  for (int i = 0; i < d; ++i) (v.parity(i) > 0 ? n0 : n1) += 1;
  if (f.kind == FieldKind::rational ? (n0 == n1)
                                    : ((n0 - n1) % static_cast<long>(f.p) == 0))
    throw Error("centralizer_j: dim(V_0) = dim(V_1) mod char(k), "
                "the construction hypothesis fails");

  EndoAlgebra so = so_eps(v, b);
  // m = {x in so : xJ = Jx}, degree by degree so the basis stays homogeneous
  std::vector<BasisVector> names;
  std::vector<Matrix> endos;
  {
    std::vector<GroupElem> degrees;
    for (int k = 0; k < so.algebra.dim(); ++k) {
      const GroupElem& g = so.algebra.space().degree(k);
      bool seen = false;
      for (const auto& e : degrees) seen = seen || e == g;
      if (!seen) degrees.push_back(g);
    }
    for (const GroupElem& gdeg : degrees) {
      std::vector<int> idx;
      for (int k = 0; k < so.algebra.dim(); ++k)
        if (so.algebra.space().degree(k) == gdeg) idx.push_back(k);
      Matrix sys(d * d, static_cast<int>(idx.size()), f);
      for (std::size_t u = 0; u < idx.size(); ++u) {
        Matrix comm = so.endos[idx[u]] * j - j * so.endos[idx[u]];
        for (int a = 0; a < d; ++a)
          for (int c = 0; c < d; ++c)
            sys.at(a * d + c, static_cast<int>(u)) = comm.at(a, c);
      }
      for (const Vec& k : kernel_basis(sys)) {
        Matrix m(d, d, f);
        for (std::size_t u = 0; u < idx.size(); ++u)
          if (!k[u].is_zero()) m = m + so.endos[idx[u]].scaled(k[u]);
        names.push_back({"m" + std::to_string(names.size()), gdeg});
        endos.push_back(std::move(m));
      }
    }
  }
  EndoAlgebra m = endo_algebra(v, std::move(names), std::move(endos),
                               Scalar::one(f));
  const int nm = m.algebra.dim();
  if (nm == 0) throw Error("centralizer_j: the centralizer is trivial");

  // the stated moment map, expressed in the m basis
  std::vector<Vec> mflat;
  for (const Matrix& mm : m.endos) {
    Vec vv;
    for (int i = 0; i < d; ++i)
      for (int jj = 0; jj < d; ++jj) vv.push_back(mm.at(i, jj));
    mflat.push_back(std::move(vv));
  }
  SpanSolver span(mflat, d * d, f);
  Scalar linv = lambda.inv();
  std::vector<std::vector<Vec>> mu_coords(d, std::vector<Vec>(d));
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      Vec ea = vec_zero(d, f), ec = vec_zero(d, f);
      ea[a] = Scalar::one(f);
      ec[c] = Scalar::one(f);
      Matrix val = mu_can_endo(b, ea, v.degree(a), ec, v.degree(c));
      Matrix tw = mu_can_endo(b, j.col(a), v.degree(a), j.col(c), v.degree(c));
      val = val - tw.scaled(linv);
      // + (1/λ)(J(v), w) J
      Scalar jw = b.eval(j.col(a), ec);
      val = val + j.scaled(linv * jw);
      Vec vv;
      for (int i = 0; i < d; ++i)
        for (int jj = 0; jj < d; ++jj) vv.push_back(val.at(i, jj));
      auto coords = span.coords_of(vv);
      if (!coords)
        throw Error("centralizer_j: the stated moment map leaves the "
                    "centralizer span");
      mu_coords[a][c] = *coords;
    }

  // solve B_m from B_m(x, μ(v,w)) = (x(v), w)
  Matrix sys(nm * d * d, nm * nm, f);
  Vec rhs = vec_zero(nm * d * d, f);
  for (int x = 0; x < nm; ++x)
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) {
        int row = (x * d + a) * d + c;
        for (int y = 0; y < nm; ++y)
          sys.at(row, x * nm + y) = mu_coords[a][c][y];
        Scalar s = Scalar::zero(f);
        for (int rr = 0; rr < d; ++rr)
          if (!m.endos[x].at(rr, a).is_zero())
            s += m.endos[x].at(rr, a) * b.gram.at(rr, c);
        rhs[row] = std::move(s);
      }
  auto sol = solve(sys, rhs);
  if (!sol)
    throw Error("centralizer_j: the linear system for B_m is inconsistent");
  Matrix gram(nm, nm, f);
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) gram.at(x, y) = (*sol)[x * nm + y];
  FormEps bm{m.algebra.space(), std::move(gram)};
  Verdict fv = bm.validate();
  if (!fv.pass)
    throw Error("centralizer_j: solved B_m is not a valid form: " +
                fv.detail());
  ColourLieAlgebra alg = m.algebra.with_form(bm);
  Verdict quad = alg.validate_quadratic();
  if (!quad.pass)
    throw Error("centralizer_j: solved B_m is not ad-invariant: " +
                quad.detail());
  return OrthRep{std::move(alg), v, b, m.endos};
}

}  // namespace cla
