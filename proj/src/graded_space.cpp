#include "cla/graded_space.hpp"

#include <set>

namespace cla {

GradedSpace::GradedSpace(FieldDescriptor field, CommutationFactor cf,
                         std::vector<BasisVector> basis) {
  if (!(field == cf.field()))
    throw Error("graded space field differs from the commutation factor field");
  std::set<std::string> names;
  for (const auto& b : basis) {
    if (!names.insert(b.name).second)
      throw Error("duplicate basis name '" + b.name + "'");
    if (static_cast<int>(b.degree.coords.size()) != cf.group().word_length())
      throw Error("degree of basis vector '" + b.name +
                  "' does not live in the grading group");
  }
  auto d = std::make_shared<Data>();
  d->field = field;
  d->cf = std::move(cf);
  d->basis = std::move(basis);
  int n = static_cast<int>(d->basis.size());
  d->parities.reserve(n);
  for (int i = 0; i < n; ++i) d->parities.push_back(d->cf.parity(d->basis[i].degree));
  d->eps_table.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d->eps_table.push_back(d->cf.eval(d->basis[i].degree, d->basis[j].degree));
  d_ = std::move(d);
}

int GradedSpace::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (d_->basis[i].name == name) return i;
  return -1;
}

std::string GradedSpace::tuple_str(const std::vector<int>& indices) const {
  std::string s = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += name(indices[i]);
  }
  return s + ")";
}

std::optional<GroupElem> GradedSpace::degree_of(const Vec& v) const {
  std::optional<GroupElem> deg;
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!deg)
      deg = degree(i);
    else if (!(*deg == degree(i)))
      return std::nullopt;
  }
  return deg;
}

bool GradedSpace::operator==(const GradedSpace& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  if (!(d_->field == o.d_->field) || !(d_->cf == o.d_->cf)) return false;
  if (d_->basis.size() != o.d_->basis.size()) return false;
  for (std::size_t i = 0; i < d_->basis.size(); ++i)
    if (d_->basis[i].name != o.d_->basis[i].name ||
        !(d_->basis[i].degree == o.d_->basis[i].degree))
      return false;
  return true;
}

GradedSpace GradedSpace::scalar_line(const FieldDescriptor& f,
                                     const CommutationFactor& cf) {
  return GradedSpace(f, cf, {BasisVector{"1", cf.group().zero()}});
}

bool GradedSpace::is_scalar_line() const {
  return dim() == 1 && degree(0).is_zero() && name(0) == "1";
}

namespace {

std::vector<BasisVector> merged_bases(const GradedSpace& v,
                                      const GradedSpace& w) {
  std::set<std::string> left;
  for (const auto& b : v.basis()) left.insert(b.name);
  bool clash = false;
  for (const auto& b : w.basis()) clash = clash || left.count(b.name) > 0;
  std::vector<BasisVector> basis;
  for (const auto& b : v.basis())
    basis.push_back({clash ? "l." + b.name : b.name, b.degree});
  for (const auto& b : w.basis())
    basis.push_back({clash ? "r." + b.name : b.name, b.degree});
  return basis;
}

}  // namespace

GradedSpace space_tensor(const GradedSpace& v, const GradedSpace& w) {
  if (!(v.field() == w.field()) || !(v.cf() == w.cf()))
    throw Error("tensor product over mismatched field or commutation factor");
  std::vector<BasisVector> basis;
  basis.reserve(static_cast<std::size_t>(v.dim()) * w.dim());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j)
      basis.push_back({v.name(i) + "⊗" + w.name(j),
                       v.group().add(v.degree(i), w.degree(j))});
  return GradedSpace(v.field(), v.cf(), std::move(basis));
}

GradedSpace space_dsum(const GradedSpace& v, const GradedSpace& w) {
  if (!(v.field() == w.field()) || !(v.cf() == w.cf()))
    throw Error("direct sum over mismatched field or commutation factor");
  return GradedSpace(v.field(), v.cf(), merged_bases(v, w));
}

GradedLinearMap GradedLinearMap::identity(const GradedSpace& v) {
  return {v, v, Matrix::identity(v.dim(), v.field()), v.group().zero()};
}

GradedLinearMap GradedLinearMap::from_matrix(const GradedSpace& source,
                                             const GradedSpace& target,
                                             Matrix m) {
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw Error("linear map matrix shape mismatch");
  GradedLinearMap f{source, target, std::move(m), std::nullopt};
  f.degree = f.infer_degree();
  return f;
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& inner) const {
  if (!(inner.target == source))
    throw Error("composition spaces do not match");
  std::optional<GroupElem> deg;
  if (degree && inner.degree)
    deg = source.group().add(*degree, *inner.degree);
  return {inner.source, target, mat * inner.mat, deg};
}

Verdict GradedLinearMap::check_degree() const {
  if (!degree) return Verdict::ok();
  Verdict v;
  for (int i = 0; i < target.dim(); ++i)
    for (int j = 0; j < source.dim(); ++j) {
      if (mat.at(i, j).is_zero()) continue;
      GroupElem want = source.group().add(source.degree(j), *degree);
      if (!(target.degree(i) == want))
        v.add_failure("entry (" + target.name(i) + "," + source.name(j) +
                      ") violates the declared degree " + degree->str());
    }
  return v;
}

std::optional<GroupElem> GradedLinearMap::infer_degree() const {
  std::optional<GroupElem> deg;
  for (int i = 0; i < target.dim(); ++i)
    for (int j = 0; j < source.dim(); ++j) {
      if (mat.at(i, j).is_zero()) continue;
      GroupElem d = source.group().sub(target.degree(i), source.degree(j));
      if (!deg)
        deg = d;
      else if (!(*deg == d))
        return std::nullopt;
    }
  return deg;
}

Scalar eps_trace(const GradedSpace& v, const Matrix& endo) {
  if (endo.rows() != v.dim() || endo.cols() != v.dim())
    throw Error("eps-trace of a non-endomorphism");
  Scalar t = Scalar::zero(v.field());
  Scalar one = Scalar::one(v.field());
  for (int i = 0; i < v.dim(); ++i) {
    if (endo.at(i, i).is_zero()) continue;
    t += (v.parity(i) > 0 ? one : -one) * endo.at(i, i);
  }
  return t;
}

Scalar eps_trace(const GradedLinearMap& f) {
  if (!(f.source == f.target)) throw Error("eps-trace of a non-endomorphism");
  return eps_trace(f.source, f.mat);
}

Verdict FormEps::validate() const {
  Verdict v;
  const GradedSpace& s = space;
  if (gram.rows() != s.dim() || gram.cols() != s.dim())
    return Verdict::fail("gram matrix shape mismatch");
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      if (!gram.at(i, j).is_zero() &&
          !s.group().add(s.degree(i), s.degree(j)).is_zero())
        v.add_failure("degree-0 violated at (" + s.name(i) + "," + s.name(j) +
                      ")");
      if (gram.at(i, j) != s.eps(i, j) * gram.at(j, i))
        v.add_failure("eps-symmetry violated at (" + s.name(i) + "," +
                      s.name(j) + ")");
    }
  if (!is_invertible(gram)) v.add_failure("gram matrix is singular");
  return v;
}

Scalar FormEps::eval(const Vec& x, const Vec& y) const {
  Scalar r = Scalar::zero(space.field());
  for (int i = 0; i < space.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < space.dim(); ++j)
      if (!y[j].is_zero() && !gram.at(i, j).is_zero())
        r += x[i] * gram.at(i, j) * y[j];
  }
  return r;
}

std::vector<Vec> FormEps::dual_basis() const {
  Matrix d = inverse(gram);
  std::vector<Vec> dual;
  dual.reserve(space.dim());
  for (int j = 0; j < space.dim(); ++j) dual.push_back(d.col(j));
  return dual;
}

std::pair<FormEps, FormEps> FormEps::split() const {
  std::vector<int> even, odd;
  for (int i = 0; i < space.dim(); ++i)
    (space.parity(i) > 0 ? even : odd).push_back(i);
  for (int i : even)
    for (int j : odd)
      if (!gram.at(i, j).is_zero() || !gram.at(j, i).is_zero())
        throw Error("even-odd cross block of the gram matrix is nonzero at (" +
                    space.name(i) + "," + space.name(j) + ")");
  auto extract = [&](const std::vector<int>& idx) {
    std::vector<BasisVector> basis;
    for (int i : idx) basis.push_back(space.basis()[i]);
    GradedSpace sub(space.field(), space.cf(), std::move(basis));
    Matrix g(static_cast<int>(idx.size()), static_cast<int>(idx.size()),
             space.field());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        g.at(static_cast<int>(a), static_cast<int>(b)) =
            gram.at(idx[a], idx[b]);
    return FormEps{sub, std::move(g)};
  };
  return {extract(even), extract(odd)};
}

FormEps form_tensor(const FormEps& bv, const FormEps& bw) {
  GradedSpace t = space_tensor(bv.space, bw.space);
  int dw = bw.space.dim();
  Matrix g(t.dim(), t.dim(), t.field());
  for (int i = 0; i < bv.space.dim(); ++i)
    for (int j = 0; j < dw; ++j)
      for (int k = 0; k < bv.space.dim(); ++k)
        for (int l = 0; l < dw; ++l) {
          // (v⊗w, v'⊗w') = ε(w,v') (v,v')_V (w,w')_W
          Scalar val = bv.space.cf().eval(bw.space.degree(j),
                                          bv.space.degree(k)) *
                       bv.eval(i, k) * bw.eval(j, l);
          g.at(i * dw + j, k * dw + l) = std::move(val);
        }
  return FormEps{t, std::move(g)};
}

FormEps form_dsum(const FormEps& bv, const FormEps& bw) {
  GradedSpace s = space_dsum(bv.space, bw.space);
  int dv = bv.space.dim();
  Matrix g(s.dim(), s.dim(), s.field());
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dv; ++j) g.at(i, j) = bv.gram.at(i, j);
  for (int i = 0; i < bw.space.dim(); ++i)
    for (int j = 0; j < bw.space.dim(); ++j)
      g.at(dv + i, dv + j) = bw.gram.at(i, j);
  return FormEps{s, std::move(g)};
}

}  // namespace cla
