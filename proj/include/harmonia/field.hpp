#pragma once

// Exact scalars over Q (GMP rationals) and prime fields GF(p).
//
// A Scalar carries its field tag. Arithmetic between scalars of different
// fields throws ErrorCode::FieldMismatch; nothing is coerced.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "harmonia/errors.hpp"

namespace harmonia {

class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws NotPrime unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "rational", "gf(p)", "GF(p)".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t characteristic() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, long num, long den);
  explicit Scalar(mpq_class q);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// "num/den", "num" (rationals) or "k mod p".
  static Scalar parse(std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Sign of a rational; throws Unsupported over GF(p).
  int sign() const;
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(std::uint64_t e) const;
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, Field f);

}  // namespace harmonia
