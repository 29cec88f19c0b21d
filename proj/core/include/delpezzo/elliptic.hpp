#pragma once

#include <optional>
#include <string>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Short Weierstrass curve y^2 = x^3 + A x + B over Q, labelled by the fiber
/// parameter t it was cut from (0 for free-standing curves).
struct FiberCurve {
  Rational t;
  Rational A;
  Rational B;

  static FiberCurve weierstrass(Rational A, Rational B) { return {Rational(0), std::move(A), std::move(B)}; }

  /// 4A^3 + 27B^2.
  Rational discriminant_core() const { return Rational(4) * A * A * A + Rational(27) * B * B; }
  bool is_singular() const { return discriminant_core().is_zero(); }
  /// x^3 + A x + B.
  Rational rhs(const Rational& x) const { return x * x * x + A * x + B; }

  friend bool operator==(const FiberCurve&, const FiberCurve&) = default;
};

/// A point of a Weierstrass curve: the origin at infinity, or an affine pair.
class ECPoint {
 public:
  ECPoint() = default;  // the origin
  ECPoint(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  static ECPoint origin() { return {}; }

  bool is_origin() const { return !affine_; }
  /// Precondition: !is_origin().
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  std::string to_string() const;
  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  bool affine_ = false;
  Rational x_;
  Rational y_;
};

namespace ec {

bool on_curve(const FiberCurve& curve, const ECPoint& p);

ECPoint negate(const ECPoint& p);

/// Chord-tangent addition. Throws InputError for off-curve input.
ECPoint add(const FiberCurve& curve, const ECPoint& p, const ECPoint& q);

/// Scalar multiple [n]P by double-and-add; negative n negates.
ECPoint multiply(const FiberCurve& curve, long n, const ECPoint& p);

/// Exact order when P is torsion (orders allowed over Q: 1..10, 12), or empty
/// for a point of infinite order. Throws DegenerateError on a singular curve.
std::optional<int> torsion_order(const FiberCurve& curve, const ECPoint& p);

inline bool is_torsion(const FiberCurve& curve, const ECPoint& p) { return torsion_order(curve, p).has_value(); }

}  // namespace ec

}  // namespace delpezzo
