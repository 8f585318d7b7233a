#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace evoalg {

class Scalar;

/// The ground field: either the rationals or a prime field GF(p).
class FieldSpec {
 public:
  /// The rationals.
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws InputError unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  /// p for GF(p), 0 for the rationals.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Accepts "3", "-7", "2/5", "-2/5". Over GF(p) the value is reduced mod p
  /// and a fraction means a division in GF(p).
  Scalar parse(std::string_view text) const;

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact element of Q or GF(p). The canonical representative is a reduced
/// fraction (Q) or a residue in [0, p) (GF(p)); two scalars compare equal
/// exactly when they are the same element of the same field. Arithmetic
/// between different fields throws InputError.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid for prime-field elements.
  std::uint64_t residue_value() const;
  /// Canonical fraction; only valid for rational elements.
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws InputError on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  /// Negative exponents require a nonzero base.
  Scalar pow(std::int64_t e) const;
  Scalar pow(const mpz_class& e) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical output: rationals before residues,
  /// then by modulus, then by value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(std::uint64_t r, std::uint64_t p) : modulus_(p), value_(std::in_place_type<std::uint64_t>, r) {}
  void require_same_field(const Scalar& rhs, const char* op) const;

  std::uint64_t modulus_ = 0;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

/// Deterministic primality for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Least m >= 1 with x^m = 1; std::nullopt means infinite order (a rational
/// other than +1 or -1). Throws InputError for x = 0.
std::optional<std::uint64_t> mult_order(const Scalar& x);

/// Whether x = mu^3 for some mu in the same field.
bool is_cube(const Scalar& x);

// Small helpers shared by the modules.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);

}  // namespace evoalg
