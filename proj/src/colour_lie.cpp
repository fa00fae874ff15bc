#include "cla/colour_lie.hpp"

#include <mutex>

#include "cla/parallel.hpp"

namespace cla {

ColourLieAlgebra::ColourLieAlgebra(GradedSpace space,
                                   std::vector<std::vector<Vec>> brackets,
                                   std::optional<FormEps> form)
    : space_(std::move(space)),
      brackets_(std::move(brackets)),
      form_(std::move(form)) {
  int n = space_.dim();
  if (static_cast<int>(brackets_.size()) != n)
    throw Error("bracket table row count mismatch");
  for (const auto& row : brackets_) {
    if (static_cast<int>(row.size()) != n)
      throw Error("bracket table is not square");
    for (const Vec& v : row)
      if (static_cast<int>(v.size()) != n)
        throw Error("bracket value length mismatch");
  }
  if (form_ && !(form_->space == space_))
    throw Error("algebra form lives on a different space");
}

ColourLieAlgebra ColourLieAlgebra::with_form(FormEps f) const {
  return ColourLieAlgebra(space_, brackets_, std::move(f));
}

Vec ColourLieAlgebra::bracket_left(int i, const Vec& y) const {
  Vec acc = vec_zero(dim(), space_.field());
  for (int l = 0; l < dim(); ++l)
    if (!y[l].is_zero()) vec_axpy(acc, y[l], brackets_[i][l]);
  return acc;
}

Vec ColourLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec acc = vec_zero(dim(), space_.field());
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int l = 0; l < dim(); ++l)
      if (!y[l].is_zero()) vec_axpy(acc, x[i] * y[l], brackets_[i][l]);
  }
  return acc;
}

Vec ColourLieAlgebra::jacobi_residual(int x, int y, int z) const {
  Vec r = vec_zero(dim(), space_.field());
  vec_axpy(r, space_.eps(z, x), bracket_left(x, brackets_[y][z]));
  vec_axpy(r, space_.eps(x, y), bracket_left(y, brackets_[z][x]));
  vec_axpy(r, space_.eps(y, z), bracket_left(z, brackets_[x][y]));
  return r;
}

Verdict ColourLieAlgebra::validate_impl(int witness_cap, bool parallel_jacobi,
                                        bool jacobi_only) const {
  Verdict v;
  const int n = dim();
  if (!jacobi_only) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec& b = brackets_[i][j];
        GroupElem want = space_.group().add(space_.degree(i), space_.degree(j));
        for (int k = 0; k < n; ++k)
          if (!b[k].is_zero() && !(space_.degree(k) == want)) {
            v.add_failure("grading fails at {" + space_.name(i) + "," +
                          space_.name(j) + "}: component " + space_.name(k));
            break;
          }
        Vec anti = vec_scale(-space_.eps(i, j), brackets_[j][i]);
        if (b != anti)
          v.add_failure("eps-antisymmetry fails at {" + space_.name(i) + "," +
                        space_.name(j) + "}");
        if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
      }
  }
  // Jacobi over all basis triples
  std::mutex mu;
  const long total = static_cast<long>(n) * n * n;
  auto check_triple = [&](long t) {
    int i = static_cast<int>(t / (static_cast<long>(n) * n));
    int j = static_cast<int>((t / n) % n);
    int k = static_cast<int>(t % n);
    Vec r = jacobi_residual(i, j, k);
    if (!vec_is_zero(r)) {
      std::lock_guard<std::mutex> lock(mu);
      if (static_cast<int>(v.witnesses.size()) < witness_cap) {
        std::string res = "(";
        for (int l = 0; l < n; ++l) {
          if (l) res += ",";
          res += r[l].str();
        }
        res += ")";
        v.add_failure("jacobi fails at (" + space_.name(i) + "," +
                      space_.name(j) + "," + space_.name(k) +
                      "), residual=" + res);
      } else {
        v.pass = false;
      }
    }
  };
  if (parallel_jacobi && parallel::threads() > 1) {
    parallel::par_for(static_cast<int>(total),
                      [&](int t) { check_triple(t); });
  } else {
    for (long t = 0; t < total; ++t) check_triple(t);
  }
  return v;
}

Verdict ColourLieAlgebra::validate(int witness_cap) const {
  return validate_impl(witness_cap, true, false);
}

Verdict ColourLieAlgebra::validate_serial(int witness_cap) const {
  return validate_impl(witness_cap, false, false);
}

Verdict ColourLieAlgebra::validate_jacobi(int witness_cap) const {
  return validate_impl(witness_cap, true, true);
}

Verdict ColourLieAlgebra::validate_quadratic(int witness_cap) const {
  if (!form_) return Verdict::fail("no invariant form declared");
  Verdict v = form_->validate();
  const int n = dim();
  const Matrix& gram = form_->gram;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // B({x,y},z) = −ε(x,y) B(y,{x,z})
        Scalar lhs = Scalar::zero(space_.field());
        for (int l = 0; l < n; ++l)
          if (!brackets_[i][j][l].is_zero())
            lhs += brackets_[i][j][l] * gram.at(l, k);
        Scalar rhs = Scalar::zero(space_.field());
        for (int l = 0; l < n; ++l)
          if (!brackets_[i][k][l].is_zero())
            rhs += brackets_[i][k][l] * gram.at(j, l);
        rhs *= -space_.eps(i, j);
        if (lhs != rhs) {
          v.add_failure("ad-invariance fails at (" + space_.name(i) + "," +
                        space_.name(j) + "," + space_.name(k) + "): lhs=" +
                        lhs.str() + " rhs=" + rhs.str());
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
      }
  return v;
}

ColourLieAlgebra cla_dsum(const ColourLieAlgebra& g, const ColourLieAlgebra& h) {
  GradedSpace s = space_dsum(g.space(), h.space());
  int ng = g.dim(), n = s.dim();
  const FieldDescriptor& f = s.field();
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n, vec_zero(n, f)));
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j)
      for (int k = 0; k < ng; ++k) br[i][j][k] = g.bracket(i, j)[k];
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      for (int k = 0; k < h.dim(); ++k)
        br[ng + i][ng + j][ng + k] = h.bracket(i, j)[k];
  std::optional<FormEps> form;
  if (g.form() && h.form()) {
    FormEps fd = form_dsum(*g.form(), *h.form());
    form = FormEps{s, std::move(fd.gram)};
  }
  return ColourLieAlgebra(s, std::move(br), std::move(form));
}

EndoAlgebra endo_algebra(const GradedSpace& on,
                         std::vector<BasisVector> basis_names,
                         std::vector<Matrix> endos,
                         const Scalar& trace_coeff) {
  if (basis_names.size() != endos.size())
    throw Error("endo algebra: name/matrix count mismatch");
  const FieldDescriptor& f = on.field();
  GradedSpace space(f, on.cf(), std::move(basis_names));
  int n = space.dim();
  int d = on.dim();
  std::vector<Vec> flat;
  flat.reserve(n);
  for (const Matrix& m : endos) {
    if (m.rows() != d || m.cols() != d)
      throw Error("endo algebra: matrix shape mismatch");
    Vec vv;
    vv.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) vv.push_back(m.at(i, j));
    flat.push_back(std::move(vv));
  }
  SpanSolver span(flat, d * d, f);
  auto coords_of = [&](const Matrix& m) {
    Vec vv;
    vv.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) vv.push_back(m.at(i, j));
    auto c = span.coords_of(vv);
    if (!c)
      throw Error("bracket leaves the span of the endomorphism basis");
    return *c;
  };
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix ab = endos[i] * endos[j];
      Matrix ba = endos[j] * endos[i];
      br[i][j] = coords_of(ab - ba.scaled(space.eps(i, j)));
    }
  // form coeff·Tr_ε(fg)
  Matrix gram(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram.at(i, j) = trace_coeff * eps_trace(on, endos[i] * endos[j]);
  ColourLieAlgebra alg(space, std::move(br), FormEps{space, std::move(gram)});
  return EndoAlgebra{std::move(alg), on, std::move(endos)};
}

EndoAlgebra gl_eps(const GradedSpace& v) {
  int d = v.dim();
  std::vector<BasisVector> names;
  std::vector<Matrix> endos;
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      names.push_back({"E(" + v.name(r) + "," + v.name(s) + ")",
                       v.group().sub(v.degree(r), v.degree(s))});
      Matrix e(d, d, v.field());
      e.at(r, s) = Scalar::one(v.field());
      endos.push_back(std::move(e));
    }
  return endo_algebra(v, std::move(names), std::move(endos),
                      Scalar::one(v.field()));
}

EndoAlgebra so_eps(const GradedSpace& v, const FormEps& b) {
  return so_eps(v, b, Scalar::of_fraction(-1, 2, v.field()));
}

EndoAlgebra so_eps(const GradedSpace& v, const FormEps& b,
                   const Scalar& trace_coeff) {
  if (!(b.space == v)) throw Error("so_eps: form lives on a different space");
  if (!is_invertible(b.gram)) throw Error("so_eps: degenerate form");
  const FieldDescriptor& f = v.field();
  const int d = v.dim();
  // candidate degrees in order of first appearance
  std::vector<GroupElem> degrees;
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      GroupElem g = v.group().sub(v.degree(r), v.degree(s));
      bool seen = false;
      for (const auto& e : degrees) seen = seen || e == g;
      if (!seen) degrees.push_back(g);
    }
  std::vector<BasisVector> names;
  std::vector<Matrix> endos;
  for (const GroupElem& gamma : degrees) {
    std::vector<std::pair<int, int>> unknowns;
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        if (v.group().sub(v.degree(r), v.degree(s)) == gamma)
          unknowns.emplace_back(r, s);
    if (unknowns.empty()) continue;
    // (f(e_a), e_b) + ε(γ, a)(e_a, f(e_b)) = 0 for all pairs (a,b)
    Matrix sys(d * d, static_cast<int>(unknowns.size()), f);
    for (int a = 0; a < d; ++a)
      for (int bb = 0; bb < d; ++bb) {
        int row = a * d + bb;
        Scalar eps_ga = v.cf().eval(gamma, v.degree(a));
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          auto [r, s] = unknowns[u];
          Scalar c = Scalar::zero(f);
          if (s == a) c += b.gram.at(r, bb);
          if (s == bb) c += eps_ga * b.gram.at(a, r);
          sys.at(row, static_cast<int>(u)) = std::move(c);
        }
      }
    for (const Vec& k : kernel_basis(sys)) {
      Matrix m(d, d, f);
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        m.at(unknowns[u].first, unknowns[u].second) = k[u];
      names.push_back({"so" + std::to_string(names.size()), gamma});
      endos.push_back(std::move(m));
    }
  }
  return endo_algebra(v, std::move(names), std::move(endos), trace_coeff);
}

Sl2Data sl2_make(const CommutationFactor& cf, const GroupElem& gamma) {
  if (cf.parity(gamma) != -1)
    throw Error("sl2_make: no odd degree available, epsilon(gamma,gamma) != -1");
  const FieldDescriptor& f = cf.field();
  GradedSpace w(f, cf,
                {{"p", gamma}, {"q", cf.group().neg(gamma)}});
  Matrix om(2, 2, f);
  om.at(0, 1) = Scalar::one(f);
  om.at(1, 0) = -Scalar::one(f);
  FormEps omega{w, std::move(om)};

  Scalar one = Scalar::one(f);
  Matrix e(2, 2, f), h(2, 2, f), ff(2, 2, f);
  e.at(0, 1) = one;
  h.at(0, 0) = one;
  h.at(1, 1) = -one;
  ff.at(1, 0) = one;
  GroupElem g2 = cf.group().add(gamma, gamma);
  std::vector<BasisVector> names = {
      {"E", g2}, {"H", cf.group().zero()}, {"F", cf.group().neg(g2)}};
  EndoAlgebra so =
      endo_algebra(w, std::move(names), {e, h, ff},
                   Scalar::of_fraction(-1, 2, f));
  // sanity: E, H, F really span so_ε(W, Ω)
  EndoAlgebra full = so_eps(w, omega);
  if (full.algebra.dim() != 3)
    throw Error("sl2_make: so_eps(W) does not have dimension 3");
  return Sl2Data{std::move(so), std::move(w), std::move(omega)};
}

HeisenbergResult heisenberg_grading(const ColourLieAlgebra& g, const Vec& h) {
  const GradedSpace& s = g.space();
  const FieldDescriptor& f = s.field();
  const int n = g.dim();
  if (static_cast<int>(h.size()) != n)
    throw Error("heisenberg_grading: element length mismatch");
  auto hdeg = s.degree_of(h);
  if (hdeg && !hdeg->is_zero())
    throw Error("heisenberg_grading: H is not of degree 0");
  Matrix ad(n, n, f);
  for (int j = 0; j < n; ++j) {
    Vec col = vec_zero(n, f);
    for (int i = 0; i < n; ++i)
      if (!h[i].is_zero()) vec_axpy(col, h[i], g.bracket(i, j));
    for (int i = 0; i < n; ++i) ad.at(i, j) = col[i];
  }
  HeisenbergResult res;
  int total = 0;
  for (long lam = -2; lam <= 2; ++lam) {
    Matrix m = ad;
    Scalar l = Scalar::of_int(lam, f);
    for (int i = 0; i < n; ++i) m.at(i, i) -= l;
    int dim_l = static_cast<int>(kernel_basis(m).size());
    res.eigdims.push_back(dim_l);
    total += dim_l;
  }
  Verdict& v = res.verdict;
  if (total != n)
    v.add_failure("eigenspaces for -2..2 span dimension " +
                  std::to_string(total) + " of " + std::to_string(n) +
                  " (ad(H) not diagonalizable over these eigenvalues)");
  if (res.eigdims[0] != 1 || res.eigdims[4] != 1)
    v.add_failure("extreme eigenspaces have dims " +
                  std::to_string(res.eigdims[0]) + " and " +
                  std::to_string(res.eigdims[4]) + ", expected 1 and 1");
  return res;
}

}  // namespace cla
