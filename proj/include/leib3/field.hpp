#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "leib3/errors.hpp"

namespace leib3 {

/// Field descriptor: the rationals, or a prime field F_p with p < 2^16.
/// Primality is checked by trial division at construction.
struct FieldSpec {
  enum class Kind : std::uint8_t { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;  // modulus, prime_field only

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_prime_field() const { return kind == Kind::prime_field; }
  std::uint32_t characteristic() const { return is_prime_field() ? p : 0; }
  std::string str() const;  // "Q" or "Fp:<p>"

  /// Parses the "--field" grammar: "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact field element. Rationals are arbitrary-precision, kept in lowest
/// terms with positive denominator; prime-field residues live in [0, p).
/// Canonical form is unique: two scalars are equal iff their stored
/// representations are identical.
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals(), 0) {}
  Scalar(const FieldSpec& f, long value);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  /// Rational from an mpq (canonicalized here).
  static Scalar rational(mpq_class v);
  /// Prime-field element from a residue (reduced here).
  static Scalar residue(const FieldSpec& f, std::uint64_t r);
  /// Text forms: rationals "a/b" or "a" with optional sign; prime-field
  /// elements as decimal residue strings (sign accepted, reduced mod p).
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZeroError on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

  const mpq_class& rat() const;  // rationals only
  std::uint32_t res() const;     // prime fields only

 private:
  Scalar(FieldSpec f, mpq_class q, std::uint32_t r)
      : field_(f), rat_(std::move(q)), res_(r) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class rat_;           // active for rationals
  std::uint32_t res_ = 0;   // active for prime fields
};

}  // namespace leib3
