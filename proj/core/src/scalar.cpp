#include "measuringkit/scalar.hpp"

#include <cctype>
#include <charconv>

namespace measuringkit {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("not a prime below 2^31: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text.size() == 1 && (text[0] == 'q' || text[0] == 'Q')) return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && p < (1ull << 31)) {
      return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw FieldError("unrecognized field '" + std::string(text) + "' (expected q or f<p>)");
}

std::string Field::name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }

Scalar Field::zero() const { return Scalar(*this, std::int64_t{0}); }
Scalar Field::one() const { return Scalar(*this, std::int64_t{1}); }
Scalar Field::from_int(std::int64_t v) const { return Scalar(*this, v); }

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw FieldError("zero denominator");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(*this, q);
  }
  std::uint32_t d = reduce(den, p_);
  if (d == 0) throw FieldError("denominator divisible by the characteristic");
  return Scalar(*this, static_cast<std::int64_t>(reduce(num, p_))) /
         Scalar(*this, static_cast<std::int64_t>(d));
}

Scalar Field::element(std::uint64_t i) const {
  if (p_ == 0 || i >= p_) throw FieldError("element index out of range");
  return Scalar(*this, static_cast<std::int64_t>(i));
}

Scalar::Scalar(const Field& field, std::int64_t value) : modulus_(field.characteristic()) {
  if (modulus_ == 0) {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    value_ = reduce(value, modulus_);
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : modulus_(field.characteristic()) {
  if (modulus_ == 0) {
    value_ = value;
  } else {
    std::uint32_t d = reduce(value.get_den(), modulus_);
    if (d == 0) throw FieldError("denominator divisible by the characteristic");
    std::uint64_t n = reduce(value.get_num(), modulus_);
    value_ = static_cast<std::uint32_t>(n * pow_mod(d, modulus_ - 2, modulus_) % modulus_);
  }
}

Field Scalar::field() const {
  return Field(modulus_);
}

bool Scalar::is_zero() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) throw FieldError("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ != 0) {
    auto v = std::get<std::uint32_t>(value_);
    r.value_ = v == 0 ? 0u : modulus_ - v;
  } else {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (modulus_ != 0) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (modulus_ != 0) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  if (modulus_ != 0) {
    r.value_ = pow_mod(std::get<std::uint32_t>(value_), modulus_ - 2, modulus_);
  } else {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  return modulus_ == rhs.modulus_ && value_ == rhs.value_;
}

mpz_class Scalar::numerator() const {
  if (modulus_ != 0) return mpz_class(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
  return std::get<mpq_class>(value_).get_num();
}

mpz_class Scalar::denominator() const {
  if (modulus_ != 0) return mpz_class(1);
  return std::get<mpq_class>(value_).get_den();
}

std::uint32_t Scalar::residue() const {
  if (modulus_ == 0) throw FieldError("residue requested over Q");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw FieldError("rational value requested over a prime field");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace measuringkit
