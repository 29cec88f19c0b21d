#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace delpezzo {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
/// zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws InputError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p", "p/q" (q may be negative; result is canonical).
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  /// Throws InputError for zero.
  Rational inverse() const;
  /// Integer power; negative exponents invert.
  Rational pow(long exponent) const;

  /// max(|numerator|, denominator).
  Integer height() const;
  /// Bits in the larger of |numerator| and denominator.
  std::size_t bit_size() const;

  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

/// Non-negative square root when `x` is the square of a rational.
std::optional<Rational> is_square(const Rational& x);

/// Exact integer square root when `n` is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

/// Exact integer cube root when `n` is a perfect cube (sign preserved).
std::optional<Integer> exact_cbrt(const Integer& n);

/// Number of bits of |n| (0 for zero).
std::size_t bit_length(const Integer& n);

std::string to_string(const Integer& n);

/// Parses a decimal integer; throws InputError on malformed text.
Integer parse_integer(std::string_view text);

}  // namespace delpezzo

template <>
struct std::hash<delpezzo::Rational> {
  std::size_t operator()(const delpezzo::Rational& r) const noexcept;
};
