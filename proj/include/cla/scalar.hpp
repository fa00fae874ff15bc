#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cla {

/// Library-wide error type. Input and consistency failures throw this;
/// the CLI maps it to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { rational, prime };

struct FieldDescriptor {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;  // modulus, prime kind only

  /// The rationals.
  static FieldDescriptor rationals() { return FieldDescriptor{}; }

  /// F_p. Throws unless p is prime and p is not 2 or 3.
  static FieldDescriptor prime_field(std::uint64_t p);

  std::uint64_t characteristic() const {
    return kind == FieldKind::prime ? p : 0;
  }

  bool operator==(const FieldDescriptor&) const = default;
  std::string str() const;
};

/// An exact field element: a canonical rational (reduced, positive
/// denominator) or a residue in [0, p). Immutable value type.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  static Scalar of_int(long n, const FieldDescriptor& f);
  static Scalar of_fraction(long num, long den, const FieldDescriptor& f);

  /// Parses "a" or "a/b" with integer a, b. Throws on malformed text,
  /// zero denominator, or b ≡ 0 mod p.
  static Scalar parse(const std::string& text, const FieldDescriptor& f);

  FieldDescriptor field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;  // throws on zero
  Scalar pow(long n) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// Exact conversion to a small integer if the value is one; used by
  /// eigenvalue bookkeeping. Throws if not an integer or out of range.
  long to_long() const;

 private:
  struct Mod {
    std::uint64_t r;
    std::uint64_t p;
  };
  std::variant<mpq_class, Mod> v_;

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint64_t r, std::uint64_t p) : v_(Mod{r, p}) {}

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  const Mod& mod() const { return std::get<Mod>(v_); }
  bool is_rational() const { return v_.index() == 0; }
  void require_same_field(const Scalar& o, const char* op) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cla
