#include "cla/representation.hpp"

namespace cla {

Matrix OrthRep::act(const Vec& x) const {
  Matrix m(space.dim(), space.dim(), space.field());
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!x[i].is_zero()) m = m + action[i].scaled(x[i]);
  return m;
}

Vec OrthRep::act(const Vec& x, const Vec& v) const {
  Vec out = vec_zero(space.dim(), space.field());
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!x[i].is_zero()) vec_axpy(out, x[i], action[i].apply(v));
  return out;
}

Verdict OrthRep::validate(int witness_cap) const {
  Verdict v;
  const GradedSpace& g = algebra.space();
  const int ng = g.dim();
  const int d = space.dim();
  if (d < 2) v.add_failure("representation space has dimension < 2");
  if (static_cast<int>(action.size()) != ng)
    return Verdict::fail("action matrix count differs from algebra dimension");
  for (const Matrix& m : action)
    if (m.rows() != d || m.cols() != d)
      return Verdict::fail("action matrix shape mismatch");
  if (!(form.space == space))
    return Verdict::fail("form lives on a different space");

  // homogeneity: ρ(x) of degree |x|
  for (int k = 0; k < ng; ++k)
    for (int i = 0; i < d && static_cast<int>(v.witnesses.size()) < witness_cap;
         ++i)
      for (int j = 0; j < d; ++j) {
        if (action[k].at(i, j).is_zero()) continue;
        if (!(space.degree(i) ==
              space.group().add(space.degree(j), g.degree(k)))) {
          v.add_failure("action of " + g.name(k) + " is not homogeneous of "
                        "its degree at (" + space.name(i) + "," +
                        space.name(j) + ")");
          break;
        }
      }

  // skew: (x(v),w) + ε(x,v)(v,x(w)) = 0
  for (int k = 0; k < ng; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Scalar lhs = Scalar::zero(space.field());
        for (int r = 0; r < d; ++r) {
          if (!action[k].at(r, i).is_zero())
            lhs += action[k].at(r, i) * form.gram.at(r, j);
          if (!action[k].at(r, j).is_zero())
            lhs += space.cf().eval(g.degree(k), space.degree(i)) *
                   form.gram.at(i, r) * action[k].at(r, j);
        }
        if (!lhs.is_zero()) {
          v.add_failure("skew-invariance fails for " + g.name(k) + " at (" +
                        space.name(i) + "," + space.name(j) + ")");
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
      }

  // morphism: ρ({x,y}) = ρ(x)ρ(y) − ε(x,y)ρ(y)ρ(x)
  for (int k = 0; k < ng; ++k)
    for (int l = 0; l < ng; ++l) {
      Matrix want(d, d, space.field());
      const Vec& br = algebra.bracket(k, l);
      for (int m = 0; m < ng; ++m)
        if (!br[m].is_zero()) want = want + action[m].scaled(br[m]);
      Matrix got =
          action[k] * action[l] - (action[l] * action[k]).scaled(g.eps(k, l));
      if (!(want == got)) {
        v.add_failure("morphism property fails at {" + g.name(k) + "," +
                      g.name(l) + "}");
        if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
      }
    }
  return v;
}

bool OrthRep::is_faithful() const {
  const int ng = algebra.dim();
  const int d = space.dim();
  Matrix stacked(d * d, ng, space.field());
  for (int k = 0; k < ng; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        stacked.at(i * d + j, k) = action[k].at(i, j);
  return kernel_basis(stacked).empty();
}

OrthRep fundamental_rep(const EndoAlgebra& ea, const FormEps& form) {
  if (!(form.space == ea.on))
    throw Error("fundamental_rep: form lives on a different space");
  return OrthRep{ea.algebra, ea.on, form, ea.endos};
}

AltMap moment_map(const OrthRep& r) {
  const ColourLieAlgebra& g = r.algebra;
  if (!g.form()) throw Error("moment map needs an invariant form on g");
  if (!is_invertible(g.form()->gram))
    throw Error("moment map needs a non-degenerate form on g");
  std::vector<Vec> dual = g.form()->dual_basis();
  const GradedSpace& v = r.space;
  return AltMap::from_function(
      v, g.space(), 2, [&](const std::vector<int>& t) {
        Vec mu = vec_zero(g.dim(), v.field());
        for (int k = 0; k < g.dim(); ++k) {
          // (e_k(v), w)
          Scalar c = Scalar::zero(v.field());
          for (int s = 0; s < v.dim(); ++s)
            if (!r.action[k].at(s, t[0]).is_zero())
              c += r.action[k].at(s, t[0]) * r.form.gram.at(s, t[1]);
          vec_axpy(mu, c, dual[k]);
        }
        return mu;
      });
}

Verdict moment_check(const OrthRep& r, const AltMap& mu, int witness_cap) {
  Verdict v;
  const ColourLieAlgebra& g = r.algebra;
  const FieldDescriptor& f = r.space.field();
  for (int k = 0; k < g.dim(); ++k) {
    Vec ek = vec_zero(g.dim(), f);
    ek[k] = Scalar::one(f);
    for (int i = 0; i < r.space.dim(); ++i)
      for (int j = 0; j < r.space.dim(); ++j) {
        Scalar lhs = g.form()->eval(ek, mu.eval({i, j}));
        Scalar rhs = Scalar::zero(f);
        for (int s = 0; s < r.space.dim(); ++s)
          if (!r.action[k].at(s, i).is_zero())
            rhs += r.action[k].at(s, i) * r.form.gram.at(s, j);
        if (lhs != rhs) {
          v.add_failure("moment identity fails at (" + g.space().name(k) +
                        "," + r.space.name(i) + "," + r.space.name(j) + ")");
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
      }
  }
  return v;
}

Matrix mu_can_endo(const FormEps& form, const Vec& u, const GroupElem& du,
                   const Vec& v, const GroupElem& dv) {
  (void)du;
  const GradedSpace& s = form.space;
  const FieldDescriptor& f = s.field();
  Matrix m(s.dim(), s.dim(), f);
  Vec ew = vec_zero(s.dim(), f);
  for (int w = 0; w < s.dim(); ++w) {
    // μ_can(u,v)(e_w) = ε(v,w)(u,e_w)v − (v,e_w)u
    ew[w] = Scalar::one(f);
    Scalar uw = form.eval(u, ew);
    Scalar vw = form.eval(v, ew);
    Scalar tw = s.cf().eval(dv, s.degree(w));
    for (int i = 0; i < s.dim(); ++i) m.at(i, w) = tw * uw * v[i] - vw * u[i];
    ew[w] = Scalar::zero(f);
  }
  return m;
}

AltMap mu_can(const GradedSpace& v, const FormEps& form,
              const EndoAlgebra& so) {
  if (!(so.on == v))
    throw Error("mu_can: so algebra acts on a different space");
  const FieldDescriptor& f = v.field();
  const int d = v.dim();
  std::vector<Vec> flat;
  for (const Matrix& m : so.endos) {
    Vec vv;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) vv.push_back(m.at(i, j));
    flat.push_back(std::move(vv));
  }
  SpanSolver span(flat, d * d, f);
  return AltMap::from_function(
      v, so.algebra.space(), 2, [&](const std::vector<int>& t) {
        Vec eu = vec_zero(d, f), ev = vec_zero(d, f);
        eu[t[0]] = Scalar::one(f);
        ev[t[1]] = Scalar::one(f);
        Matrix m = mu_can_endo(form, eu, v.degree(t[0]), ev, v.degree(t[1]));
        Vec vv;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) vv.push_back(m.at(i, j));
        auto coords = span.coords_of(vv);
        if (!coords)
          throw Error("mu_can value is outside so_eps (basis inconsistency)");
        return *coords;
      });
}

AltMap mu_can(const GradedSpace& v, const FormEps& form) {
  return mu_can(v, form, so_eps(v, form));
}

OrthRep rep_tensor(const OrthRep& r, const OrthRep& s) {
  if (!(r.space.field() == s.space.field()) || !(r.space.cf() == s.space.cf()))
    throw Error("rep_tensor: mismatched field or commutation factor");
  ColourLieAlgebra sum = cla_dsum(r.algebra, s.algebra);
  GradedSpace vw = space_tensor(r.space, s.space);
  FormEps fvw{vw, form_tensor(r.form, s.form).gram};
  const FieldDescriptor& f = vw.field();
  const int dv = r.space.dim(), dw = s.space.dim();
  std::vector<Matrix> action;
  for (int k = 0; k < r.algebra.dim(); ++k) {
    Matrix m(dv * dw, dv * dw, f);
    for (int i = 0; i < dv; ++i)
      for (int c = 0; c < dv; ++c) {
        if (r.action[k].at(i, c).is_zero()) continue;
        for (int j = 0; j < dw; ++j)
          m.at(i * dw + j, c * dw + j) = r.action[k].at(i, c);
      }
    action.push_back(std::move(m));
  }
  for (int k = 0; k < s.algebra.dim(); ++k) {
    Matrix m(dv * dw, dv * dw, f);
    const GroupElem& hk = s.algebra.space().degree(k);
    for (int i = 0; i < dv; ++i) {
      Scalar tw = vw.cf().eval(hk, r.space.degree(i));
      for (int j = 0; j < dw; ++j)
        for (int c = 0; c < dw; ++c)
          if (!s.action[k].at(j, c).is_zero())
            m.at(i * dw + j, i * dw + c) = tw * s.action[k].at(j, c);
    }
    action.push_back(std::move(m));
  }
  return OrthRep{std::move(sum), std::move(vw), std::move(fvw),
                 std::move(action)};
}

Pairing action_pairing(const OrthRep& r) {
  return Pairing::build(r.algebra.space(), r.space, r.space,
                        [&](int k, int j) { return r.action[k].col(j); });
}

}  // namespace cla
