#include "cla/scalar.hpp"

#include <cctype>
#include <ostream>

namespace cla {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool probably_prime(std::uint64_t p) {
  if (p < (1u << 20)) return is_small_prime(p);
  mpz_class z = mpz_class(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
  return powmod(a, p - 2, p);
}

// value of an arbitrary-precision integer mod p, mapped into [0, p)
std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m = mpz_class(std::to_string(p));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return r.get_ui();
}

bool valid_int_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p == 2 || p == 3)
    throw Error("fields of characteristic 2 or 3 are not supported");
  if (!probably_prime(p))
    throw Error("modulus " + std::to_string(p) + " is not prime");
  return FieldDescriptor{FieldKind::prime, p};
}

std::string FieldDescriptor::str() const {
  return kind == FieldKind::rational ? "Q" : "F_" + std::to_string(p);
}

Scalar Scalar::zero(const FieldDescriptor& f) {
  return f.kind == FieldKind::rational ? Scalar(mpq_class(0)) : Scalar(0, f.p);
}

Scalar Scalar::one(const FieldDescriptor& f) {
  return f.kind == FieldKind::rational ? Scalar(mpq_class(1)) : Scalar(1, f.p);
}

Scalar Scalar::of_int(long n, const FieldDescriptor& f) {
  if (f.kind == FieldKind::rational) return Scalar(mpq_class(n));
  return Scalar(reduce(mpz_class(n), f.p), f.p);
}

Scalar Scalar::of_fraction(long num, long den, const FieldDescriptor& f) {
  return of_int(num, f) / of_int(den, f);
}

Scalar Scalar::parse(const std::string& text, const FieldDescriptor& f) {
  std::string num_part = text, den_part;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  if (!valid_int_text(num_part) || (!den_part.empty() && !valid_int_text(den_part)))
    throw Error("malformed scalar '" + text + "'");
  mpz_class num(num_part);
  mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(den_part);
  if (den == 0) throw Error("zero denominator in '" + text + "'");
  if (f.kind == FieldKind::rational) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::uint64_t d = reduce(den, f.p);
  if (d == 0)
    throw Error("denominator of '" + text + "' vanishes mod " +
                std::to_string(f.p));
  return Scalar(mulmod(reduce(num, f.p), invmod(d, f.p), f.p), f.p);
}

FieldDescriptor Scalar::field() const {
  if (is_rational()) return FieldDescriptor::rationals();
  return FieldDescriptor{FieldKind::prime, mod().p};
}

bool Scalar::is_zero() const {
  return is_rational() ? rat() == 0 : mod().r == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rat() == 1 : mod().r == 1;
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
  if (is_rational() != o.is_rational() ||
      (!is_rational() && mod().p != o.mod().p))
    throw Error(std::string("mixed fields in scalar ") + op + ": " +
                field().str() + " vs " + o.field().str());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rat()));
  const Mod& m = mod();
  return Scalar(m.r == 0 ? 0 : m.p - m.r, m.p);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rat()));
  return Scalar(invmod(mod().r, mod().p), mod().p);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw Error("zero raised to a negative power");
    return inv().pow(-n);
  }
  Scalar base = *this;
  Scalar acc = Scalar::one(field());
  unsigned long e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o, "add");
  if (is_rational())
    v_ = mpq_class(rat() + o.rat());
  else
    v_ = Mod{(mod().r + o.mod().r) % mod().p, mod().p};
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o, "sub");
  if (is_rational())
    v_ = mpq_class(rat() - o.rat());
  else
    v_ = Mod{(mod().r + o.mod().p - o.mod().r) % mod().p, mod().p};
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o, "mul");
  if (is_rational())
    v_ = mpq_class(rat() * o.rat());
  else
    v_ = Mod{mulmod(mod().r, o.mod().r, mod().p), mod().p};
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o, "div");
  return *this *= o.inv();
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o, "compare");
  return is_rational() ? rat() == o.rat() : mod().r == o.mod().r;
}

std::string Scalar::str() const {
  return is_rational() ? rat().get_str() : std::to_string(mod().r);
}

long Scalar::to_long() const {
  if (is_rational()) {
    if (rat().get_den() != 1 || !rat().get_num().fits_slong_p())
      throw Error("scalar " + str() + " is not a small integer");
    return rat().get_num().get_si();
  }
  return static_cast<long>(mod().r);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace cla
