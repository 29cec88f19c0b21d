#include <doctest.h>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/errors.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace delpezzo;

namespace {

struct TwoPointCurve {
  FiberCurve curve;
  ECPoint p;
  ECPoint q;
};

// The curve y^2 = x^3 + A x + B through two chosen rational points.
TwoPointCurve curve_through_two(testgen::Rng& rng, long h) {
  for (;;) {
    const Rational x1 = rng.rational(h), y1 = rng.rational(h, true);
    const Rational x2 = rng.rational(h), y2 = rng.rational(h, true);
    if (x1 == x2) continue;
    const Rational r1 = y1 * y1 - x1.pow(3);
    const Rational r2 = y2 * y2 - x2.pow(3);
    const Rational A = (r1 - r2) / (x1 - x2);
    const Rational B = r1 - A * x1;
    auto curve = FiberCurve::weierstrass(A, B);
    if (curve.is_singular()) continue;
    return {curve, ECPoint(x1, y1), ECPoint(x2, y2)};
  }
}

}  // namespace

TEST_SUITE("elliptic") {
  TEST_CASE("addition examples") {
    const auto e = FiberCurve::weierstrass(0, 2);
    const ECPoint p(-1, 1);
    CHECK(ec::on_curve(e, p));
    CHECK(ec::add(e, p, p) == ECPoint(Rational(17, 4), Rational(-71, 8)));
    CHECK(ec::negate(ec::add(e, p, p)) == ECPoint(Rational(17, 4), Rational(71, 8)));
    CHECK(ec::add(e, p, ec::negate(p)).is_origin());
    CHECK(ec::add(e, p, ECPoint::origin()) == p);
    CHECK(ec::multiply(e, 0, p).is_origin());
    CHECK(ec::multiply(e, -2, p) == ECPoint(Rational(17, 4), Rational(71, 8)));
    CHECK_THROWS_AS(ec::add(e, p, ECPoint(1, 1)), InputError);
  }

  TEST_CASE("torsion examples") {
    CHECK(ec::torsion_order(FiberCurve::weierstrass(0, 4), ECPoint(0, 2)) == 3);
    CHECK_FALSE(ec::torsion_order(FiberCurve::weierstrass(0, 2), ECPoint(-1, 1)).has_value());
    CHECK(ec::torsion_order(FiberCurve::weierstrass(0, 2), ECPoint::origin()) == 1);
    CHECK_FALSE(ec::torsion_order(FiberCurve::weierstrass(0, 3), ECPoint(1, 2)).has_value());
    // y^2 = x^3 - x: (0, 0) has order 2.
    CHECK(ec::torsion_order(FiberCurve::weierstrass(-1, 0), ECPoint(0, 0)) == 2);
    // y^2 = x^3 + 1: (2, 3) has order 6.
    CHECK(ec::torsion_order(FiberCurve::weierstrass(0, 1), ECPoint(2, 3)) == 6);
    CHECK_THROWS_AS(ec::torsion_order(FiberCurve::weierstrass(0, 0), ECPoint(1, 1)), DegenerateError);
  }

  TEST_CASE("torsion status is stable under negation") {
    testgen::Rng rng(5);
    for (int i = 0; i < 40; ++i) {
      const auto [e, p] = rng.curve_with_point(6);
      CHECK(ec::torsion_order(e, p) == ec::torsion_order(e, ec::negate(p)));
    }
    const auto e = FiberCurve::weierstrass(0, 1);
    CHECK(ec::torsion_order(e, ECPoint(2, -3)) == 6);
  }

  TEST_CASE("multiply matches repeated Jacobian addition") {
    testgen::Rng rng(9);
    for (int i = 0; i < 15; ++i) {
      const auto [e, p] = rng.curve_with_point(5);
      for (long n = 0; n <= 12; ++n) CHECK(ec::multiply(e, n, p) == oracle::repeated_multiple(e, n, p));
    }
  }

  TEST_CASE("associativity on random triples") {
    testgen::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const auto [e, p, q] = curve_through_two(rng, 6);
      const ECPoint r = ec::add(e, p, ec::multiply(e, 2, q));
      REQUIRE(ec::on_curve(e, r));
      const ECPoint lhs = ec::add(e, ec::add(e, p, q), r);
      const ECPoint rhs = ec::add(e, p, ec::add(e, q, r));
      CHECK(lhs == rhs);
      CHECK(ec::add(e, p, q) == ec::add(e, q, p));
      CHECK(oracle::from_jacobian(oracle::jacobian_add(e, oracle::to_jacobian(p), oracle::to_jacobian(q))) ==
            ec::add(e, p, q));
    }
  }

  TEST_CASE("multiples add up") {
    const auto e = FiberCurve::weierstrass(0, 2);
    const ECPoint p(-1, 1);
    std::vector<ECPoint> mult(41);
    for (long n = 0; n <= 40; ++n) mult[static_cast<std::size_t>(n)] = ec::multiply(e, n, p);
    for (std::size_t m = 0; m <= 20; ++m) {
      for (std::size_t n = 0; n <= 20; ++n) CHECK(ec::add(e, mult[m], mult[n]) == mult[m + n]);
    }
  }

  TEST_CASE("group law on random curves stays on the curve") {
    testgen::Rng rng(13);
    for (int i = 0; i < 30; ++i) {
      const auto [e, p] = rng.curve_with_point(8);
      for (long n = -4; n <= 4; ++n) CHECK(ec::on_curve(e, ec::multiply(e, n, p)));
      CHECK(ec::add(e, p, ec::negate(p)).is_origin());
    }
  }
}
