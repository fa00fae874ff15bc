#include "cla/curvature.hpp"

namespace cla {

CurvatureTensor::CurvatureTensor(GradedSpace space)
    : space_(std::move(space)) {
  int n = space_.dim();
  vals_.assign(static_cast<std::size_t>(n) * n * n * n,
               Scalar::zero(space_.field()));
}

CurvatureTensor CurvatureTensor::from_values(
    const GradedSpace& space,
    const std::function<Scalar(int, int, int, int)>& fn) {
  CurvatureTensor r(space);
  int n = space.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) r.at(a, b, c, d) = fn(a, b, c, d);
  return r;
}

Verdict CurvatureTensor::validate(int witness_cap) const {
  Verdict v;
  int n = space_.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (at(a, b, c, d) != -space_.eps(a, b) * at(b, a, c, d)) {
            v.add_failure("pair antisymmetry fails at " +
                          space_.tuple_str({a, b, c, d}));
          } else {
            Scalar swap = space_.cf().eval(
                space_.group().add(space_.degree(a), space_.degree(b)),
                space_.group().add(space_.degree(c), space_.degree(d)));
            if (at(a, b, c, d) != swap * at(c, d, a, b))
              v.add_failure("pair-swap symmetry fails at " +
                            space_.tuple_str({a, b, c, d}));
          }
          if (static_cast<int>(v.witnesses.size()) >= witness_cap) return v;
        }
  return v;
}

bool CurvatureTensor::is_alternating() const {
  int n = space_.dim();
  std::vector<int> t(4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          t = {a, b, c, d};
          for (int l = 0; l < 3; ++l) {
            std::vector<int> s = t;
            std::swap(s[l], s[l + 1]);
            if (at(t[0], t[1], t[2], t[3]) !=
                -space_.eps(t[l], t[l + 1]) * at(s[0], s[1], s[2], s[3]))
              return false;
          }
        }
  return true;
}

CurvatureTensor CurvatureTensor::bianchi() const {
  int n = space_.dim();
  CurvatureTensor out(space_);
  const AbelianGroup& grp = space_.group();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar e1 = space_.cf().eval(space_.degree(a),
                                     grp.add(space_.degree(b), space_.degree(c)));
        Scalar e2 = space_.cf().eval(grp.add(space_.degree(a), space_.degree(b)),
                                     space_.degree(c));
        for (int d = 0; d < n; ++d)
          out.at(a, b, c, d) =
              at(a, b, c, d) + e1 * at(b, c, a, d) + e2 * at(c, a, b, d);
      }
  return out;
}

CurvatureTensor CurvatureTensor::operator+(const CurvatureTensor& o) const {
  CurvatureTensor r = *this;
  for (std::size_t i = 0; i < vals_.size(); ++i) r.vals_[i] += o.vals_[i];
  return r;
}

CurvatureTensor CurvatureTensor::operator-(const CurvatureTensor& o) const {
  CurvatureTensor r = *this;
  for (std::size_t i = 0; i < vals_.size(); ++i) r.vals_[i] -= o.vals_[i];
  return r;
}

CurvatureTensor CurvatureTensor::scaled(const Scalar& c) const {
  CurvatureTensor r = *this;
  for (Scalar& s : r.vals_) s *= c;
  return r;
}

bool CurvatureTensor::operator==(const CurvatureTensor& o) const {
  return space_ == o.space_ && vals_ == o.vals_;
}

bool CurvatureTensor::is_zero() const {
  for (const Scalar& s : vals_)
    if (!s.is_zero()) return false;
  return true;
}

AltMap CurvatureTensor::to_altmap() const {
  GradedSpace line = GradedSpace::scalar_line(space_.field(), space_.cf());
  return AltMap::from_function(space_, line, 4,
                               [&](const std::vector<int>& t) {
                                 return Vec{at(t[0], t[1], t[2], t[3])};
                               });
}

CurvatureTensor curvature_from(const AltMap& mu, const FormEps& b_g,
                               const AltMap* phi, const FormEps& form_v) {
  const GradedSpace& v = mu.domain();
  const FieldDescriptor& f = v.field();
  if (!mu.is_degree_zero()) throw Error("curvature_from: μ is not of degree 0");
  if (phi && !phi->is_degree_zero())
    throw Error("curvature_from: φ is not of degree 0");
  CurvatureTensor r = CurvatureTensor::from_values(
      v, [&](int a, int b, int c, int d) {
        Scalar val = b_g.eval(mu.eval({a, b}), mu.eval({c, d}));
        if (phi) {
          Vec inner = phi->eval({a, b});
          Vec ec = vec_zero(v.dim(), f);
          ec[c] = Scalar::one(f);
          Vec outer = phi->eval_multi({inner, ec});
          Vec ed = vec_zero(v.dim(), f);
          ed[d] = Scalar::one(f);
          val += form_v.eval(outer, ed);
        }
        return val;
      });
  Verdict sym = r.validate();
  if (!sym.pass)
    throw Error("curvature tensor symmetries fail (invalid μ or φ): " +
                sym.detail());
  return r;
}

CurvatureTensor canonical_curvature(const FormEps& form_v) {
  const GradedSpace& v = form_v.space;
  return CurvatureTensor::from_values(v, [&](int a, int b, int c, int d) {
    // (μ_can(e_a,e_b)(e_c), e_d) = ε(b,c)(e_a,e_c)(e_b,e_d) − (e_b,e_c)(e_a,e_d)
    return v.eps(b, c) * form_v.eval(a, c) * form_v.eval(b, d) -
           form_v.eval(b, c) * form_v.eval(a, d);
  });
}

Verdict special_condition_b(const OrthRep& r, const AltMap& mu,
                            int witness_cap) {
  Verdict verdict;
  const GradedSpace& v = r.space;
  const FieldDescriptor& f = v.field();
  const int n = v.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vec eb = vec_zero(n, f), ec = vec_zero(n, f), ea = vec_zero(n, f);
        ea[a] = Scalar::one(f);
        eb[b] = Scalar::one(f);
        ec[c] = Scalar::one(f);
        Vec lhs = r.act(mu.eval({a, b}), ec);
        vec_axpy(lhs, v.eps(b, c), r.act(mu.eval({a, c}), eb));
        Vec rhs = vec_zero(n, f);
        vec_axpy(rhs, r.form.eval(a, b), ec);
        vec_axpy(rhs, v.eps(b, c) * r.form.eval(a, c), eb);
        vec_axpy(rhs, Scalar::of_int(-2, f) * r.form.eval(b, c), ea);
        if (lhs != rhs) {
          verdict.add_failure("condition (b) fails at " +
                              v.tuple_str({a, b, c}));
          if (static_cast<int>(verdict.witnesses.size()) >= witness_cap)
            return verdict;
        }
      }
  return verdict;
}

Verdict special_condition_curvature(const OrthRep& r, const AltMap& mu) {
  if (!r.algebra.form()) throw Error("is_special needs an invariant form on g");
  CurvatureTensor rmu = curvature_from(mu, *r.algebra.form(), nullptr, r.form);
  CurvatureTensor third =
      rmu.bianchi().scaled(Scalar::of_fraction(1, 3, r.space.field()));
  CurvatureTensor want = canonical_curvature(r.form);
  if (rmu - third == want) return Verdict::ok();
  return Verdict::fail("R_mu - (1/3)beta(R_mu) differs from R_mu_can");
}

Verdict is_special(const OrthRep& r, const AltMap& mu) {
  Verdict b = special_condition_b(r, mu);
  Verdict curv = special_condition_curvature(r, mu);
  if (b.pass != curv.pass)
    throw Error("is_special criteria disagree (implementation bug): "
                "condition (b) " + std::string(b.pass ? "passes" : "fails") +
                " but the curvature definition " +
                (curv.pass ? "passes" : "fails"));
  if (!curv.pass) b.merge(curv);
  return b;
}

Verdict is_special(const OrthRep& r) { return is_special(r, moment_map(r)); }

}  // namespace cla
