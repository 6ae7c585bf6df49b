#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leiblab {

class Scalar;

/// Descriptor of the ground field: the rationals or GF(p) for an odd prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws Char2Field for p = 2 and InvalidField when p is not an odd prime.
  static Field prime(std::uint32_t p);
  /// Accepts "rational", "q", "gf(p)" (case-insensitive).
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Parses "n" or "n/d". Over GF(p) the value is reduced mod p.
  Scalar parse_scalar(std::string_view text) const;
  /// Coerces a scalar of another field (rationals are reduced mod p).
  Scalar coerce(const Scalar& s) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact field element. Rationals carry an arbitrary-precision mpq value,
/// residues mod p a machine integer in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, std::int64_t v);
  static Scalar rational(mpq_class v);
  static Scalar residue(std::int64_t v, std::uint32_t p);

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const;
  bool is_one() const;

  /// Rational value (only meaningful over the rationals).
  mpq_class to_rational() const;
  /// Residue in [0, p) (only meaningful over GF(p)).
  std::int64_t to_residue() const { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "n" or "n/d" for rationals, the residue for GF(p).
  std::string to_string() const;

 private:
  // p_ == 0: rational; q_ holds the value, an empty q_ means zero.
  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;
  std::optional<mpq_class> q_;

  void unify(const Scalar& o);
};

}  // namespace leiblab
