#include "cla/grading.hpp"

namespace cla {

std::string GroupElem::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

AbelianGroup::AbelianGroup(int rank, std::vector<long> torsion)
    : free_rank(rank), torsion_orders(std::move(torsion)) {
  if (rank < 0) throw Error("negative free rank");
  for (long m : torsion_orders)
    if (m < 2) throw Error("torsion order " + std::to_string(m) + " < 2");
}

GroupElem AbelianGroup::zero() const {
  return GroupElem{std::vector<long>(word_length(), 0)};
}

GroupElem AbelianGroup::element(std::vector<long> coords) const {
  if (static_cast<int>(coords.size()) != word_length())
    throw Error("group element has " + std::to_string(coords.size()) +
                " coordinates, expected " + std::to_string(word_length()));
  for (std::size_t t = 0; t < torsion_orders.size(); ++t) {
    long m = torsion_orders[t];
    long& c = coords[free_rank + t];
    c %= m;
    if (c < 0) c += m;
  }
  return GroupElem{std::move(coords)};
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  std::vector<long> c(word_length());
  for (int i = 0; i < word_length(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElem AbelianGroup::neg(const GroupElem& a) const {
  std::vector<long> c(word_length());
  for (int i = 0; i < word_length(); ++i) c[i] = -a.coords[i];
  return element(std::move(c));
}

GroupElem AbelianGroup::sub(const GroupElem& a, const GroupElem& b) const {
  return add(a, neg(b));
}

CommutationFactor::CommutationFactor(AbelianGroup group, FieldDescriptor field,
                                     std::vector<std::vector<Scalar>> gen_values)
    : group_(std::move(group)),
      field_(field),
      gen_values_(std::move(gen_values)) {
  std::size_t n = group_.word_length();
  if (gen_values_.size() != n)
    throw Error("epsilon matrix has " + std::to_string(gen_values_.size()) +
                " rows, expected " + std::to_string(n));
  for (const auto& row : gen_values_)
    if (row.size() != n) throw Error("epsilon matrix is not square");
}

Verdict CommutationFactor::validate() const {
  Verdict v;
  const int n = group_.word_length();
  const Scalar one = Scalar::one(field_);
  for (int i = 0; i < n && v.pass; ++i) {
    for (int j = 0; j < n && v.pass; ++j) {
      if (gen_values_[i][j].is_zero()) {
        v.add_failure("epsilon(" + std::to_string(i) + "," +
                      std::to_string(j) + ") = 0 is not a unit");
        break;
      }
      if (gen_values_[i][j] * gen_values_[j][i] != one)
        v.add_failure("epsilon(a,b)epsilon(b,a) != 1 at generators (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (!v.pass) return v;
  for (int i = 0; i < n; ++i) {
    const Scalar& d = gen_values_[i][i];
    if (d != one && d != -one)
      v.add_failure("epsilon(g,g) not in {1,-1} at generator " +
                    std::to_string(i));
  }
  // torsion generator of order m: values involving it must be m-th roots of 1
  for (std::size_t t = 0; t < group_.torsion_orders.size(); ++t) {
    int i = group_.free_rank + static_cast<int>(t);
    long m = group_.torsion_orders[t];
    for (int j = 0; j < n; ++j) {
      if (gen_values_[i][j].pow(m) != one)
        v.add_failure("order constraint epsilon(" + std::to_string(i) + "," +
                      std::to_string(j) + ")^" + std::to_string(m) +
                      " != 1 fails");
      if (gen_values_[j][i].pow(m) != one)
        v.add_failure("order constraint epsilon(" + std::to_string(j) + "," +
                      std::to_string(i) + ")^" + std::to_string(m) +
                      " != 1 fails");
    }
  }
  return v;
}

Scalar CommutationFactor::eval(const GroupElem& a, const GroupElem& b) const {
  const int n = group_.word_length();
  if (static_cast<int>(a.coords.size()) != n ||
      static_cast<int>(b.coords.size()) != n)
    throw Error("epsilon arguments do not live in the grading group");
  Scalar r = Scalar::one(field_);
  for (int i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      r *= gen_values_[i][j].pow(a.coords[i] * b.coords[j]);
    }
  }
  return r;
}

int CommutationFactor::parity(const GroupElem& a) const {
  Scalar s = eval(a, a);
  if (s.is_one()) return 1;
  if (s == -Scalar::one(field_)) return -1;
  throw Error("epsilon(a,a) is not a sign at a = " + a.str() +
              " (invalid commutation factor)");
}

bool CommutationFactor::operator==(const CommutationFactor& o) const {
  return group_ == o.group_ && field_ == o.field_ &&
         gen_values_ == o.gen_values_;
}

}  // namespace cla
