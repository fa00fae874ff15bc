#include "cla/extension.hpp"

namespace cla {

Verdict phi_validate(const OrthRep& r, const AltMap& phi, int witness_cap) {
  Verdict v;
  const GradedSpace& vs = r.space;
  const FieldDescriptor& f = vs.field();
  if (!(phi.domain() == vs) || !(phi.codomain() == vs) || phi.arity() != 2)
    return Verdict::fail("phi is not an arity-2 map V -> V");
  if (!phi.is_degree_zero()) v.add_failure("phi is not of degree 0");

  const int n = vs.dim();
  const int ng = r.algebra.dim();
  // ρ(x)(φ(v,w)) = φ(ρ(x)(v),w) + ε(x,v)φ(v,ρ(x)(w))
  for (int k = 0; k < ng; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = r.action[k].apply(phi.eval({i, j}));
        Vec ei = vec_zero(n, f), ej = vec_zero(n, f);
        ei[i] = Scalar::one(f);
        ej[j] = Scalar::one(f);
        Vec rhs = phi.eval_multi({r.action[k].col(i), ej});
        vec_axpy(rhs,
                 vs.cf().eval(r.algebra.space().degree(k), vs.degree(i)),
                 phi.eval_multi({ei, r.action[k].col(j)}));
        if (lhs != rhs) {
          v.add_failure("g-invariance of phi fails at (" +
                        r.algebra.space().name(k) + "," + vs.name(i) + "," +
                        vs.name(j) + ")");
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
      }
  // (φ(u,v),w) = −ε(u,v)(v,φ(u,w))
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec ew = vec_zero(n, f), ev = vec_zero(n, f);
        ew[j] = Scalar::one(f);
        ev[i] = Scalar::one(f);
        Scalar lhs = r.form.eval(phi.eval({u, i}), ew);
        Scalar rhs = -vs.eps(u, i) * r.form.eval(ev, phi.eval({u, j}));
        if (lhs != rhs) {
          v.add_failure("form-invariance of phi fails at " +
                        vs.tuple_str({u, i, j}));
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
      }
  return v;
}

ExtendResult extend(const OrthRep& r, const AltMap& phi, bool force) {
  Verdict phi_check = phi_validate(r, phi);
  if (!phi_check.pass && !force)
    throw Error("phi is invalid: " + phi_check.detail());
  if (!r.algebra.form())
    throw Error("extend needs an invariant form on g");

  const GradedSpace& gs = r.algebra.space();
  const GradedSpace& vs = r.space;
  const FieldDescriptor& f = vs.field();
  const int ng = gs.dim(), nv = vs.dim(), n = ng + nv;

  GradedSpace sum = space_dsum(gs, vs);
  AltMap mu = moment_map(r);

  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n, vec_zero(n, f)));
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j)
      for (int k = 0; k < ng; ++k) br[i][j][k] = r.algebra.bracket(i, j)[k];
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < nv; ++j) {
      // {x, v} = ρ(x)(v); {v, x} = −ε(v,x){x,v}
      for (int k = 0; k < nv; ++k) {
        br[i][ng + j][ng + k] = r.action[i].at(k, j);
        br[ng + j][i][ng + k] =
            -vs.cf().eval(vs.degree(j), gs.degree(i)) * r.action[i].at(k, j);
      }
    }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      Vec m = mu.eval({i, j});
      for (int k = 0; k < ng; ++k) br[ng + i][ng + j][k] = m[k];
      Vec p = phi.eval({i, j});
      for (int k = 0; k < nv; ++k) br[ng + i][ng + j][ng + k] = p[k];
    }
  FormEps bsum{sum, form_dsum(*r.algebra.form(), r.form).gram};
  ColourLieAlgebra candidate(sum, std::move(br), std::move(bsum));

  TripleVerdict tv;
  tv.jacobi = candidate.validate_jacobi();

  // ψ = μ+φ as a map into g̃, normed by B_g̃
  std::vector<Vec> psi_vals;
  const TupleTable& tt = mu.table();
  for (int row = 0; row < tt.size(); ++row) {
    Vec val = vec_zero(n, f);
    const Vec& m = mu.value(row);
    for (int k = 0; k < ng; ++k) val[k] = m[k];
    const Vec& p = phi.value(row);
    for (int k = 0; k < nv; ++k) val[ng + k] = p[k];
    psi_vals.push_back(std::move(val));
  }
  AltMap psi(vs, sum, 2, std::move(psi_vals));
  AltMap norm_sum = alt_norm(psi, Pairing::from_form(*candidate.form()));
  if (norm_sum.is_zero())
    tv.norm_zero = Verdict::ok();
  else
    tv.norm_zero = Verdict::fail("N(mu+phi) != 0");

  AltMap norm_mu = alt_norm(mu, Pairing::from_form(*r.algebra.form()));
  AltMap norm_phi = alt_norm(phi, Pairing::from_form(r.form));
  if (norm_mu == norm_phi.scaled(-Scalar::one(f)))
    tv.norm_balance = Verdict::ok();
  else
    tv.norm_balance = Verdict::fail("N(mu) != -N(phi)");

  return ExtendResult{std::move(candidate), std::move(mu), std::move(tv),
                      std::move(phi_check), ng};
}

ExtendResult z2_lie_check(const OrthRep& r) {
  return extend(r, AltMap::zero(r.space, r.space, 2));
}

ExtendSl2Result extend_sl2(const OrthRep& r, const GroupElem& gamma) {
  Sl2Data sl2 = sl2_make(r.space.cf(), gamma);
  OrthRep w_rep = fundamental_rep(sl2.so, sl2.omega);
  OrthRep tensor = rep_tensor(r, w_rep);
  ExtendResult ext = extend(tensor, AltMap::zero(tensor.space, tensor.space, 2));

  ExtendSl2Result out{std::move(ext.algebra), std::move(tensor), Verdict{},
                      Verdict{}, r.algebra.dim() + 1};
  out.verdict = out.algebra.validate();
  out.verdict.merge(out.algebra.validate_quadratic());
  if (!r.is_faithful())
    out.faithful = Verdict::fail(
        "representation is not faithful (theorem hypothesis violated; "
        "verdict still computed)");
  return out;
}

}  // namespace cla
