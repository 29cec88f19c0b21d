#pragma once

#include <ostream>
#include <string>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Element p + q*sqrt(D) of the quadratic field Q(sqrt(D)).
///
/// D must not be the square of a rational: callers test with is_square() and
/// stay in plain Rational arithmetic when it is. Every binary operation
/// requires both operands to share the same D.
class QuadExt {
 public:
  /// Throws InputError when `radicand` is a rational square.
  QuadExt(Rational p, Rational q, Rational radicand);

  /// Embeds a rational into Q(sqrt(radicand)).
  static QuadExt embed(const Rational& value, const Rational& radicand) {
    return QuadExt(value, Rational(0), radicand);
  }
  /// The generator sqrt(radicand).
  static QuadExt root(const Rational& radicand) { return QuadExt(Rational(0), Rational(1), radicand); }

  const Rational& rational_part() const { return p_; }
  const Rational& irrational_part() const { return q_; }
  const Rational& radicand() const { return d_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  QuadExt conjugate() const { return QuadExt(p_, -q_, d_, Unchecked{}); }
  /// p^2 - q^2 D.
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }
  /// Throws InputError for zero.
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(-p_, -q_, d_, Unchecked{}); }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
    return lhs.d_ == rhs.d_ && lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

 private:
  struct Unchecked {};
  QuadExt(Rational p, Rational q, Rational d, Unchecked)
      : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}
  void require_same_field(const QuadExt& rhs) const;

  Rational p_;
  Rational q_;
  Rational d_;
};

}  // namespace delpezzo
