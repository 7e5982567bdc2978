#pragma once

// Exact field elements: rationals (GMP) and prime fields F_p with p < 2^31.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace measuringkit {

class Scalar;

/// Raised when scalars or maps over different fields are combined, or when a
/// field description is malformed.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The base field. Either Q or F_p for a prime p < 2^31.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "f<p>" (case-insensitive), e.g. "f2", "F3".
  static Field parse(std::string_view text);

  Kind kind() const { return p_ == 0 ? Kind::rationals : Kind::prime; }
  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  /// The i-th element of a finite field in canonical order 0, 1, ..., p-1.
  Scalar element(std::uint64_t i) const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

class Scalar {
 public:
  Scalar(const Field& field, std::int64_t value);
  Scalar(const Field& field, const mpq_class& value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& rhs) const;

  /// Canonical representative for prime fields; reduced fraction for Q.
  mpz_class numerator() const;
  mpz_class denominator() const;
  /// Residue in [0, p); only valid over a prime field.
  std::uint32_t residue() const;
  /// Exact value; only valid over Q.
  const mpq_class& rational() const;

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  std::uint32_t modulus_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace measuringkit
