#include "cla/altmap.hpp"

#include <array>

#include "cla/parallel.hpp"

namespace cla {

// ---------------------------------------------------------------- TupleTable

TupleTable::TupleTable(const GradedSpace& space, int arity) : arity_(arity) {
  if (arity < 0) throw Error("negative alt-map arity");
  if (arity > 12) throw Error("alt-map arity > 12 is unsupported");
  if (space.dim() > 31)
    throw Error("alt-map domain dimension > 31 is unsupported");
  std::vector<int> t(arity);
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == arity) {
      index_.emplace(pack(t.data(), arity), static_cast<int>(tuples_.size()));
      tuples_.push_back(t);
      return;
    }
    for (int i = start; i < space.dim(); ++i) {
      t[depth] = i;
      self(self, depth + 1, space.parity(i) > 0 ? i + 1 : i);
    }
  };
  rec(rec, 0, 0);
}

std::uint64_t TupleTable::pack(const int* idx, int n) {
  std::uint64_t key = 0;
  for (int l = 0; l < n; ++l)
    key |= static_cast<std::uint64_t>(idx[l]) << (5 * l);
  return key;
}

int TupleTable::find(const std::vector<int>& sorted_tuple) const {
  if (static_cast<int>(sorted_tuple.size()) != arity_) return -1;
  auto it = index_.find(pack(sorted_tuple.data(), arity_));
  return it == index_.end() ? -1 : it->second;
}

// ------------------------------------------------------------------- AltMap

AltMap::AltMap(GradedSpace domain, GradedSpace codomain, int arity,
               std::vector<Vec> values)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      arity_(arity),
      table_(std::make_shared<TupleTable>(domain_, arity)),
      values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != table_->size())
    throw Error("alt-map value count mismatch: got " +
                std::to_string(values_.size()) + ", expected " +
                std::to_string(table_->size()));
  for (const Vec& v : values_)
    if (static_cast<int>(v.size()) != codomain_.dim())
      throw Error("alt-map value length mismatch");
}

AltMap AltMap::zero(const GradedSpace& domain, const GradedSpace& codomain,
                    int arity) {
  TupleTable t(domain, arity);
  return AltMap(domain, codomain, arity,
                std::vector<Vec>(t.size(), vec_zero(codomain.dim(), domain.field())));
}

AltMap AltMap::from_function(
    const GradedSpace& domain, const GradedSpace& codomain, int arity,
    const std::function<Vec(const std::vector<int>&)>& fn, bool validate) {
  TupleTable table(domain, arity);
  std::vector<Vec> vals;
  vals.reserve(table.size());
  for (int r = 0; r < table.size(); ++r) {
    Vec v = fn(table.tuple(r));
    if (static_cast<int>(v.size()) != codomain.dim())
      throw Error("alt-map evaluator value length mismatch");
    vals.push_back(std::move(v));
  }
  if (validate) {
    const int cap = 128;
    for (int r = 0; r < table.size() && r < cap; ++r) {
      const std::vector<int>& t = table.tuple(r);
      for (int l = 0; l + 1 < arity; ++l) {
        if (t[l] == t[l + 1]) continue;
        std::vector<int> swapped = t;
        std::swap(swapped[l], swapped[l + 1]);
        Vec got = fn(swapped);
        Vec want = vec_scale(-domain.eps(t[l + 1], t[l]), vals[r]);
        if (got != want)
          throw Error("evaluator is not eps-alternating at " +
                      domain.tuple_str(swapped));
      }
    }
  }
  return AltMap(domain, codomain, arity, std::move(vals));
}

AltMap AltMap::identity_map(const GradedSpace& v) {
  return from_function(v, v, 1, [&](const std::vector<int>& t) {
    Vec e = vec_zero(v.dim(), v.field());
    e[t[0]] = Scalar::one(v.field());
    return e;
  });
}

Vec AltMap::eval(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != arity_)
    throw Error("alt-map arity mismatch in evaluation");
  auto [sorted, sign] = sort_with_sign(indices, domain_);
  for (int l = 0; l + 1 < arity_; ++l)
    if (sorted[l] == sorted[l + 1] && domain_.parity(sorted[l]) > 0)
      return vec_zero(codomain_.dim(), domain_.field());
  int row = table_->find(sorted);
  if (row < 0) return vec_zero(codomain_.dim(), domain_.field());
  if (sign.is_one()) return values_[row];
  return vec_scale(sign, values_[row]);
}

Vec AltMap::eval_multi(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw Error("alt-map arity mismatch in multilinear evaluation");
  Vec acc = vec_zero(codomain_.dim(), domain_.field());
  std::vector<std::vector<int>> support(arity_);
  for (int l = 0; l < arity_; ++l) {
    if (static_cast<int>(args[l].size()) != domain_.dim())
      throw Error("multilinear argument length mismatch");
    for (int i = 0; i < domain_.dim(); ++i)
      if (!args[l][i].is_zero()) support[l].push_back(i);
    if (support[l].empty()) return acc;
  }
  std::vector<std::size_t> pos(arity_, 0);
  std::vector<int> combo(arity_);
  for (;;) {
    Scalar coeff = Scalar::one(domain_.field());
    for (int l = 0; l < arity_; ++l) {
      combo[l] = support[l][pos[l]];
      coeff *= args[l][combo[l]];
    }
    vec_axpy(acc, coeff, eval(combo));
    int l = arity_ - 1;
    while (l >= 0 && ++pos[l] == support[l].size()) pos[l--] = 0;
    if (l < 0) break;
  }
  return acc;
}

bool AltMap::is_zero() const {
  for (const Vec& v : values_)
    if (!vec_is_zero(v)) return false;
  return true;
}

AltMap AltMap::operator+(const AltMap& o) const {
  if (!(domain_ == o.domain_) || !(codomain_ == o.codomain_) ||
      arity_ != o.arity_)
    throw Error("alt-map sum shape mismatch");
  std::vector<Vec> vals = values_;
  for (std::size_t r = 0; r < vals.size(); ++r)
    vals[r] = vec_add(vals[r], o.values_[r]);
  return AltMap(domain_, codomain_, arity_, std::move(vals));
}

AltMap AltMap::operator-(const AltMap& o) const {
  return *this + o.scaled(-Scalar::one(domain_.field()));
}

AltMap AltMap::scaled(const Scalar& c) const {
  std::vector<Vec> vals = values_;
  for (Vec& v : vals) v = vec_scale(c, v);
  return AltMap(domain_, codomain_, arity_, std::move(vals));
}

bool AltMap::operator==(const AltMap& o) const {
  return domain_ == o.domain_ && codomain_ == o.codomain_ &&
         arity_ == o.arity_ && values_ == o.values_;
}

std::optional<GroupElem> AltMap::inferred_degree() const {
  std::optional<GroupElem> delta;
  const AbelianGroup& grp = domain_.group();
  for (int r = 0; r < table_->size(); ++r) {
    if (vec_is_zero(values_[r])) continue;
    auto vdeg = codomain_.degree_of(values_[r]);
    if (!vdeg) return std::nullopt;
    GroupElem sum = grp.zero();
    for (int i : table_->tuple(r)) sum = grp.add(sum, domain_.degree(i));
    GroupElem d = grp.sub(*vdeg, sum);
    if (!delta)
      delta = d;
    else if (!(*delta == d))
      return std::nullopt;
  }
  return delta;
}

bool AltMap::is_degree_zero() const {
  const AbelianGroup& grp = domain_.group();
  for (int r = 0; r < table_->size(); ++r) {
    GroupElem sum = grp.zero();
    for (int i : table_->tuple(r)) sum = grp.add(sum, domain_.degree(i));
    for (int k = 0; k < codomain_.dim(); ++k)
      if (!values_[r][k].is_zero() && !(codomain_.degree(k) == sum))
        return false;
  }
  return true;
}

// ------------------------------------------------------------------ Pairing

Pairing Pairing::build(const GradedSpace& a, const GradedSpace& b,
                       const GradedSpace& out,
                       const std::function<Vec(int, int)>& fn) {
  Pairing p{a, b, out, {}};
  p.table.resize(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    p.table[i].reserve(b.dim());
    for (int j = 0; j < b.dim(); ++j) {
      Vec v = fn(i, j);
      if (static_cast<int>(v.size()) != out.dim())
        throw Error("pairing value length mismatch");
      p.table[i].push_back(std::move(v));
    }
  }
  return p;
}

Pairing Pairing::from_form(const FormEps& form) {
  GradedSpace line = GradedSpace::scalar_line(form.space.field(), form.space.cf());
  return build(form.space, form.space, line,
               [&](int i, int j) { return Vec{form.eval(i, j)}; });
}

Pairing Pairing::scalar_mult(const GradedSpace& v) {
  GradedSpace line = GradedSpace::scalar_line(v.field(), v.cf());
  return build(line, v, v, [&](int, int j) {
    Vec e = vec_zero(v.dim(), v.field());
    e[j] = Scalar::one(v.field());
    return e;
  });
}

Pairing Pairing::field_mult(const FieldDescriptor& f,
                            const CommutationFactor& cf) {
  GradedSpace line = GradedSpace::scalar_line(f, cf);
  return build(line, line, line,
               [&](int, int) { return Vec{Scalar::one(f)}; });
}

Vec Pairing::apply(const Vec& x, const Vec& y) const {
  Vec acc = vec_zero(out.dim(), out.field());
  for (int i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (y[j].is_zero()) continue;
      vec_axpy(acc, x[i] * y[j], table[i][j]);
    }
  }
  return acc;
}

// -------------------------------------------------------- shuffle-sum kernels

namespace {

using Blocks = std::vector<std::vector<int>>;
using TermFn = std::function<Vec(const Blocks&)>;
using Memo = std::unordered_map<std::uint64_t, Vec>;

struct KernelPlan {
  const GradedSpace* dom = nullptr;
  std::vector<int> sizes;
  std::vector<int> offsets;  // slot offset per block
  int n = 0;
  int out_len = 0;

  KernelPlan(const GradedSpace& d, std::vector<int> s, int out)
      : dom(&d), sizes(std::move(s)), out_len(out) {
    offsets.reserve(sizes.size());
    for (int size : sizes) {
      if (size <= 0) throw Error("non-positive shuffle block size");
      offsets.push_back(n);
      n += size;
    }
    if (n > 12) throw Error("alt-map arity > 12 is unsupported");
  }

  Blocks unpack(std::uint64_t key) const {
    Blocks blocks(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      blocks[b].reserve(sizes[b]);
      for (int s = 0; s < sizes[b]; ++s) {
        int slot = offsets[b] + s;
        blocks[b].push_back(static_cast<int>((key >> (5 * slot)) & 31));
      }
    }
    return blocks;
  }
};

const Vec& memo_term(const KernelPlan& plan, std::uint64_t key,
                     const TermFn& term, Memo& memo) {
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, term(plan.unpack(key))).first->second;
}

// Optimized path: walks the ordered-partition tree of shuffle permutations,
// maintaining the p-sign incrementally (one adjacent-pair factor per
// assignment) and the packed rearranged tuple, then groups equal terms and
// multiplies each distinct term value once.
Vec shuffle_sum_fast(const KernelPlan& plan, const std::vector<int>& tuple,
                     const TermFn& term, Memo& memo) {
  const GradedSpace& dom = *plan.dom;
  const FieldDescriptor& field = dom.field();
  const int n = plan.n;
  const int m = static_cast<int>(plan.sizes.size());
  const Scalar one = Scalar::one(field);

  // -eps over the basis indices present in the tuple
  bool general = false;
  std::array<std::array<signed char, 32>, 32> bit{};
  std::vector<std::vector<Scalar>> gen;
  for (int x : tuple)
    for (int y : tuple) {
      Scalar v = -dom.eps(x, y);
      if (v != one && v != -one) general = true;
      bit[x][y] = (v == one) ? 0 : 1;
    }
  if (general) {
    gen.assign(dom.dim(), std::vector<Scalar>(dom.dim(), one));
    for (int x : tuple)
      for (int y : tuple) gen[x][y] = -dom.eps(x, y);
  }

  std::vector<int> block_of(n, -1), fill(m, 0);
  std::uint64_t key = 0;
  std::unordered_map<std::uint64_t, long long> int_coeff;
  std::unordered_map<std::uint64_t, Scalar> gen_coeff;

  if (!general) {
    auto rec = [&](auto&& self, int pos, int parity) -> void {
      if (pos == n) {
        int_coeff[key] += parity ? -1 : 1;
        return;
      }
      for (int b = 0; b < m; ++b) {
        if (fill[b] == plan.sizes[b]) continue;
        int par = parity;
        for (int i = 0; i < pos; ++i)
          if (block_of[i] > b) par ^= bit[tuple[i]][tuple[pos]];
        int slot = plan.offsets[b] + fill[b];
        key |= static_cast<std::uint64_t>(tuple[pos]) << (5 * slot);
        block_of[pos] = b;
        ++fill[b];
        self(self, pos + 1, par);
        --fill[b];
        block_of[pos] = -1;
        key &= ~(static_cast<std::uint64_t>(31) << (5 * slot));
      }
    };
    rec(rec, 0, 0);
  } else {
    auto rec = [&](auto&& self, int pos, const Scalar& sign) -> void {
      if (pos == n) {
        auto it = gen_coeff.find(key);
        if (it == gen_coeff.end())
          gen_coeff.emplace(key, sign);
        else
          it->second += sign;
        return;
      }
      for (int b = 0; b < m; ++b) {
        if (fill[b] == plan.sizes[b]) continue;
        Scalar s = sign;
        for (int i = 0; i < pos; ++i)
          if (block_of[i] > b) s *= gen[tuple[i]][tuple[pos]];
        int slot = plan.offsets[b] + fill[b];
        key |= static_cast<std::uint64_t>(tuple[pos]) << (5 * slot);
        block_of[pos] = b;
        ++fill[b];
        self(self, pos + 1, s);
        --fill[b];
        block_of[pos] = -1;
        key &= ~(static_cast<std::uint64_t>(31) << (5 * slot));
      }
    };
    rec(rec, 0, one);
  }

  Vec acc = vec_zero(plan.out_len, field);
  for (const auto& [k, c] : int_coeff) {
    if (c == 0) continue;
    vec_axpy(acc, Scalar::of_int(c, field), memo_term(plan, k, term, memo));
  }
  for (const auto& [k, c] : gen_coeff) {
    if (c.is_zero()) continue;
    vec_axpy(acc, c, memo_term(plan, k, term, memo));
  }
  return acc;
}

// Reference path: direct sum over shuffle permutations with the closed
// p-sign formula. Serial, no memoization.
Vec shuffle_sum_reference(const KernelPlan& plan, const std::vector<int>& tuple,
                          const TermFn& term) {
  const GradedSpace& dom = *plan.dom;
  std::vector<GroupElem> degrees;
  degrees.reserve(tuple.size());
  for (int i : tuple) degrees.push_back(dom.degree(i));
  Vec acc = vec_zero(plan.out_len, dom.field());
  for_each_shuffle(plan.sizes, [&](const Perm& sigma) {
    Scalar sign = p_sign(sigma, degrees, dom.cf());
    Blocks blocks(plan.sizes.size());
    for (std::size_t b = 0; b < plan.sizes.size(); ++b) {
      blocks[b].reserve(plan.sizes[b]);
      for (int s = 0; s < plan.sizes[b]; ++s)
        blocks[b].push_back(tuple[sigma[plan.offsets[b] + s]]);
    }
    vec_axpy(acc, sign, term(blocks));
  });
  return acc;
}

std::vector<Vec> materialize(const KernelPlan& plan, const TupleTable& table,
                             const TermFn& term, EvalStrategy strategy) {
  std::vector<Vec> vals(table.size());
  if (strategy == EvalStrategy::reference) {
    for (int r = 0; r < table.size(); ++r)
      vals[r] = shuffle_sum_reference(plan, table.tuple(r), term);
    return vals;
  }
#ifdef _OPENMP
  if (parallel::threads() > 1 && table.size() > 1) {
    std::string error;
#pragma omp parallel num_threads(cla::parallel::threads())
    {
      Memo memo;
#pragma omp for schedule(dynamic)
      for (int r = 0; r < table.size(); ++r) {
        try {
          vals[r] = shuffle_sum_fast(plan, table.tuple(r), term, memo);
        } catch (const std::exception& e) {
#pragma omp critical
          error = e.what();
        }
      }
    }
    if (!error.empty()) throw Error(error);
    return vals;
  }
#endif
  Memo memo;
  for (int r = 0; r < table.size(); ++r)
    vals[r] = shuffle_sum_fast(plan, table.tuple(r), term, memo);
  return vals;
}

TermFn wedge_term(const AltMap& f, const AltMap& g, const Pairing& phi) {
  return [&f, &g, &phi](const Blocks& blocks) {
    return phi.apply(f.eval(blocks[0]), g.eval(blocks[1]));
  };
}

// Dense value table of an alt map over all index tuples, for fast
// multilinear expansion inside composition terms.
struct DenseTable {
  int arity = 0;
  int dim = 0;
  std::vector<Vec> vals;
};

std::shared_ptr<const DenseTable> make_dense(const AltMap& f) {
  long total = 1;
  for (int l = 0; l < f.arity(); ++l) {
    total *= f.domain().dim();
    if (total > 100000) return nullptr;
  }
  auto t = std::make_shared<DenseTable>();
  t->arity = f.arity();
  t->dim = f.domain().dim();
  t->vals.reserve(total);
  std::vector<int> tuple(f.arity(), 0);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    for (int l = 0; l < f.arity(); ++l) {
      tuple[l] = static_cast<int>(rest % t->dim);
      rest /= t->dim;
    }
    t->vals.push_back(f.eval(tuple));
  }
  return t;
}

Vec dense_multi_eval(const DenseTable& t, const std::vector<Vec>& args,
                     int out_len, const FieldDescriptor& field) {
  Vec acc = vec_zero(out_len, field);
  std::vector<std::vector<int>> support(t.arity);
  for (int l = 0; l < t.arity; ++l) {
    for (int i = 0; i < t.dim; ++i)
      if (!args[l][i].is_zero()) support[l].push_back(i);
    if (support[l].empty()) return acc;
  }
  std::vector<std::size_t> pos(t.arity, 0);
  for (;;) {
    Scalar coeff = Scalar::one(field);
    long idx = 0;
    long stride = 1;
    for (int l = 0; l < t.arity; ++l) {
      int i = support[l][pos[l]];
      coeff *= args[l][i];
      idx += stride * i;
      stride *= t.dim;
    }
    vec_axpy(acc, coeff, t.vals[idx]);
    int l = t.arity - 1;
    while (l >= 0 && ++pos[l] == support[l].size()) pos[l--] = 0;
    if (l < 0) break;
  }
  return acc;
}

TermFn compose_term(const AltMap& f, const AltMap& g) {
  std::shared_ptr<const DenseTable> dense = make_dense(f);
  int out_len = f.codomain().dim();
  FieldDescriptor field = f.domain().field();
  return [&f, &g, dense, out_len, field](const Blocks& blocks) {
    std::vector<Vec> inner;
    inner.reserve(blocks.size());
    for (const auto& b : blocks) inner.push_back(g.eval(b));
    if (dense) return dense_multi_eval(*dense, inner, out_len, field);
    return f.eval_multi(inner);
  };
}

void check_wedge_shapes(const AltMap& f, const AltMap& g, const Pairing& phi) {
  if (!(f.domain() == g.domain()))
    throw Error("wedge: factors have different domains");
  if (!(f.codomain() == phi.a) || !(g.codomain() == phi.b))
    throw Error("wedge: pairing does not match the factor codomains");
  if (f.arity() < 1 || g.arity() < 1)
    throw Error("wedge requires arity >= 1 factors");
}

void check_compose_shapes(const AltMap& f, const AltMap& g) {
  if (!(g.codomain() == f.domain()))
    throw Error("compose: codomain of the inner map differs from the domain "
                "of the outer map");
  if (f.arity() < 1 || g.arity() < 1)
    throw Error("compose requires arity >= 1 maps");
}

}  // namespace

AltMap wedge(const AltMap& f, const AltMap& g, const Pairing& phi,
             EvalStrategy strategy) {
  check_wedge_shapes(f, g, phi);
  KernelPlan plan(f.domain(), {f.arity(), g.arity()}, phi.out.dim());
  TupleTable table(f.domain(), plan.n);
  auto vals = materialize(plan, table, wedge_term(f, g, phi), strategy);
  return AltMap(f.domain(), phi.out, plan.n, std::move(vals));
}

AltMap alt_norm(const AltMap& f, const Pairing& phi, EvalStrategy strategy) {
  return wedge(f, f, phi, strategy);
}

AltMap exterior_compose(const AltMap& f, const AltMap& g,
                        EvalStrategy strategy) {
  check_compose_shapes(f, g);
  KernelPlan plan(g.domain(), std::vector<int>(f.arity(), g.arity()),
                  f.codomain().dim());
  TupleTable table(g.domain(), plan.n);
  auto vals = materialize(plan, table, compose_term(f, g), strategy);
  return AltMap(g.domain(), f.codomain(), plan.n, std::move(vals));
}

Vec wedge_eval(const AltMap& f, const AltMap& g, const Pairing& phi,
               const std::vector<int>& tuple, EvalStrategy strategy) {
  check_wedge_shapes(f, g, phi);
  KernelPlan plan(f.domain(), {f.arity(), g.arity()}, phi.out.dim());
  if (static_cast<int>(tuple.size()) != plan.n)
    throw Error("wedge evaluation tuple length mismatch");
  if (strategy == EvalStrategy::reference)
    return shuffle_sum_reference(plan, tuple, wedge_term(f, g, phi));
  auto [sorted, sign] = sort_with_sign(tuple, f.domain());
  for (std::size_t l = 0; l + 1 < sorted.size(); ++l)
    if (sorted[l] == sorted[l + 1] && f.domain().parity(sorted[l]) > 0)
      return vec_zero(plan.out_len, f.domain().field());
  Memo memo;
  Vec v = shuffle_sum_fast(plan, sorted, wedge_term(f, g, phi), memo);
  return sign.is_one() ? v : vec_scale(sign, v);
}

Vec compose_eval(const AltMap& f, const AltMap& g,
                 const std::vector<int>& tuple, EvalStrategy strategy) {
  check_compose_shapes(f, g);
  KernelPlan plan(g.domain(), std::vector<int>(f.arity(), g.arity()),
                  f.codomain().dim());
  if (static_cast<int>(tuple.size()) != plan.n)
    throw Error("compose evaluation tuple length mismatch");
  if (strategy == EvalStrategy::reference)
    return shuffle_sum_reference(plan, tuple, compose_term(f, g));
  auto [sorted, sign] = sort_with_sign(tuple, g.domain());
  for (std::size_t l = 0; l + 1 < sorted.size(); ++l)
    if (sorted[l] == sorted[l + 1] && g.domain().parity(sorted[l]) > 0)
      return vec_zero(plan.out_len, g.domain().field());
  Memo memo;
  Vec v = shuffle_sum_fast(plan, sorted, compose_term(f, g), memo);
  return sign.is_one() ? v : vec_scale(sign, v);
}

}  // namespace cla
