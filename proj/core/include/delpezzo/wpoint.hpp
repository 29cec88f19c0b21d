#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Affine Weierstrass data of a point with w != 0: fiber parameter t = z/w and
/// (X, Y) = (x/w^2, y/w^3).
struct AffineData {
  Rational t;
  Rational x;
  Rational y;
  friend bool operator==(const AffineData&, const AffineData&) = default;
};

/// Point [x:y:z:w] of the weighted projective space P(2,3,1,1), always held in
/// canonical integer form: no prime p divides (z, w) with p^2 | x and p^3 | y,
/// and the first nonzero of (w, z) is positive (else y >= 0).
class WPoint {
 public:
  /// Canonicalizes integer coordinates; throws InputError if all are zero.
  static WPoint make(Integer x, Integer y, Integer z, Integer w);
  /// Rational coordinates, scaled to integers then canonicalized.
  static WPoint make_rational(const Rational& x, const Rational& y, const Rational& z, const Rational& w);
  /// The point with w != 0 lying over fiber t with Weierstrass coordinates (X, Y).
  static WPoint from_affine(const Rational& t, const Rational& x, const Rational& y);
  /// Parses "[x:y:z:w]" with integer (or rational) entries.
  static WPoint parse(std::string_view text);

  /// The anticanonical base point [1:1:0:0].
  static WPoint base_point() { return make(1, 1, 0, 0); }

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  const Integer& z() const { return z_; }
  const Integer& w() const { return w_; }

  /// (z/w, x/w^2, y/w^3); empty when w = 0.
  std::optional<AffineData> affine() const;

  std::string to_string() const;

  friend bool operator==(const WPoint&, const WPoint&) = default;
  friend std::strong_ordering operator<=>(const WPoint& lhs, const WPoint& rhs);

 private:
  WPoint(Integer x, Integer y, Integer z, Integer w)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {}

  Integer x_;
  Integer y_;
  Integer z_;
  Integer w_;
};

}  // namespace delpezzo
