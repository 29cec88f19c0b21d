#include "delpezzo/elliptic.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

std::string ECPoint::to_string() const {
  if (is_origin()) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

namespace ec {

namespace {

void require_on_curve(const FiberCurve& curve, const ECPoint& p) {
  if (!on_curve(curve, p)) {
    throw InputError("point " + p.to_string() + " is not on y^2 = x^3 + (" + curve.A.to_string() + ")x + (" +
                     curve.B.to_string() + ")");
  }
}

// Addition without the on-curve checks, for the inner loops of multiply().
ECPoint add_unchecked(const FiberCurve& curve, const ECPoint& p, const ECPoint& q) {
  if (p.is_origin()) return q;
  if (q.is_origin()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return ECPoint::origin();
    slope = (Rational(3) * p.x() * p.x() + curve.A) / (Rational(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return {std::move(x3), std::move(y3)};
}

}  // namespace

bool on_curve(const FiberCurve& curve, const ECPoint& p) {
  if (p.is_origin()) return true;
  return p.y() * p.y() == curve.rhs(p.x());
}

ECPoint negate(const ECPoint& p) {
  if (p.is_origin()) return p;
  return {p.x(), -p.y()};
}

ECPoint add(const FiberCurve& curve, const ECPoint& p, const ECPoint& q) {
  require_on_curve(curve, p);
  require_on_curve(curve, q);
  return add_unchecked(curve, p, q);
}

ECPoint multiply(const FiberCurve& curve, long n, const ECPoint& p) {
  require_on_curve(curve, p);
  if (n < 0) return negate(multiply(curve, -n, p));
  ECPoint result;
  ECPoint base = p;
  auto k = static_cast<unsigned long>(n);
  while (k != 0) {
    if (k & 1UL) result = add_unchecked(curve, result, base);
    k >>= 1U;
    if (k != 0) base = add_unchecked(curve, base, base);
  }
  return result;
}

std::optional<int> torsion_order(const FiberCurve& curve, const ECPoint& p) {
  if (curve.is_singular()) throw DegenerateError("torsion test on a singular curve");
  require_on_curve(curve, p);
  if (p.is_origin()) return 1;
  // Mazur: rational torsion orders are 1..10 and 12.
  ECPoint multiple = p;
  for (int n = 2; n <= 12; ++n) {
    multiple = add_unchecked(curve, multiple, p);
    if (n == 11) continue;
    if (multiple.is_origin()) return n;
  }
  return std::nullopt;
}

}  // namespace ec

}  // namespace delpezzo
