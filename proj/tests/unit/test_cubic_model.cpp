#include <doctest.h>

#include <set>

#include "delpezzo/cubic_model.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/point_engine.hpp"
#include "random_inputs.hpp"

using namespace delpezzo;

namespace {

const SurfaceParams dw123{0, 0, 1, 2, 3, {0, 0, 0, 1}};
const SurfaceParams dw102{0, 0, 1, 0, 2, {0, 0, 0, 1}};

struct SurfaceWithSeed {
  Surface surface;
  WPoint seed;
};

// Random smooth surface through a chosen affine point (t0, x0, y0), with e
// solved for. The point avoids 2-torsion and singular fibers.
SurfaceWithSeed random_seeded_surface(testgen::Rng& rng, long h) {
  for (;;) {
    SurfaceParams p = rng.integral_surface(h);
    const Rational t0 = rng.small_integer(2);
    const Rational x0 = rng.small_integer(h);
    const Rational y0 = rng.small_integer(h, true);
    const Rational u = p.f[0] + t0 * (p.f[1] + t0 * (p.f[2] + t0 * p.f[3]));
    p.e = y0 * y0 - x0.pow(3) - (p.a * u + p.b) * x0 - (p.c * u + p.d) * u;
    const Surface s = Surface::build(p);
    if (!smoothness_check(s).is_smooth()) continue;
    if (s.fiber_at(t0).is_singular()) continue;
    const WPoint seed = WPoint::from_affine(t0, x0, y0);
    if (CubicW(s).is_singular_at(theta(s, seed))) continue;
    return {s, seed};
  }
}

}  // namespace

TEST_SUITE("cubic_model") {
  TEST_CASE("theta examples") {
    const Surface s = Surface::build(dw123);
    CHECK(theta(s, WPoint::parse("[-1:1:-1:1]")).to_string() == "[-1:1:-1:1]");
    CHECK(theta(s, WPoint::base_point()).to_string() == "[0:1:0:0]");
    CHECK(theta(Surface::build(dw102), WPoint::parse("[1:2:1:1]")).to_string() == "[1:2:1:1]");
    CHECK_THROWS_AS(theta(s, WPoint::parse("[1:1:1:1]")), InputError);
  }

  TEST_CASE("theta lands on W") {
    testgen::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      const auto [s, seed] = random_seeded_surface(rng, 4);
      const CubicW w(s);
      CHECK(w.contains(theta(s, seed)));
      CHECK(w.contains(theta(s, WPoint::base_point())));
      const auto pts = brute_force_oracle(s, {1, 1, 4, 1});
      for (const auto& fp : pts) CHECK(w.contains(theta(s, WPoint::from_affine(fp.t, fp.x, fp.y))));
    }
  }

  TEST_CASE("theta identifies points with equal f value") {
    // f = t^3 - t takes the value 0 at t = -1, 0, 1; the fibers coincide.
    const Surface s = Surface::build({1, 2, 1, 0, 1, {0, -1, 0, 1}});
    const FiberCurve e0 = s.fiber_at(0);
    CHECK(e0 == FiberCurve{0, 2, 1});
    const WPoint p0 = WPoint::from_affine(0, 0, 1);
    const WPoint p1 = WPoint::from_affine(1, 0, 1);
    const WPoint pm = WPoint::from_affine(-1, 0, 1);
    REQUIRE(s.contains(p0));
    REQUIRE(s.contains(p1));
    CHECK(theta(s, p0) == theta(s, p1));
    CHECK(theta(s, p0).proportional(theta(s, pm)));
  }

  TEST_CASE("tangent plane and pullback for the worked seed") {
    const Surface s = Surface::build(dw123);
    const WPoint p = WPoint::parse("[-1:1:-1:1]");
    const PlaneForm plane = tangent_plane(s, p);
    CHECK(plane == PlaneForm{3, -2, 0, 5});
    CHECK(plane.evaluate(theta(s, p).as_rational()).is_zero());
    const PullbackForm ell = pullback_plane(s, plane);
    CHECK(ell.to_string() == "3xw - 2y + 5w^3");
    CHECK(ell.evaluate(p).is_zero());
    const FiberLine line = restrict_to_fiber(ell, -1);
    CHECK(line == FiberLine{-1, 3, -2, 5});
    CHECK(eliminated_cubic(line, s.fiber_at(-1)) == UniPoly({-17, -30, -9, 4}));
  }

  TEST_CASE("tangent plane at the singular points of W") {
    const Surface s = Surface::build(dw123);
    const CubicW w(s);
    for (int sign : {1, -1}) {
      const P3Point q = P3Point::from_rational({0, sign, 1, 0});
      CHECK(w.contains(q));
      CHECK(w.is_singular_at(q));
    }
    CHECK_FALSE(w.is_singular_at(theta(s, WPoint::parse("[-1:1:-1:1]"))));
  }

  TEST_CASE("tangent point for the worked seed") {
    const Surface s = Surface::build(dw123);
    const ECPoint q = tangent_point(s, WPoint::parse("[-1:1:-1:1]"));
    CHECK(q == ECPoint(Rational(17, 4), Rational(71, 8)));
    CHECK(s.contains(WPoint::from_affine(-1, q.x(), q.y())));
  }

  TEST_CASE("tangent point rejects 2-torsion seeds") {
    // y^2 = x^3 + 8 at t = 0 has the 2-torsion point (-2, 0).
    const Surface s = Surface::build({0, 0, 1, 0, 8, {0, 0, 0, 1}});
    const WPoint p = WPoint::from_affine(0, -2, 0);
    REQUIRE(s.contains(p));
    CHECK_THROWS_AS(tangent_point(s, p), DegenerateError);
    CHECK_THROWS_AS(tangent_point(s, WPoint::base_point()), InputError);
  }

  TEST_CASE("tangent point equals minus twice P on random seeds") {
    testgen::Rng rng(23);
    for (int i = 0; i < 25; ++i) {
      const auto [s, seed] = random_seeded_surface(rng, 5);
      const auto aff = *seed.affine();
      const FiberCurve e = s.fiber_at(aff.t);
      const ECPoint p(aff.x, aff.y);
      const ECPoint q = tangent_point(s, seed);
      CHECK(q == ec::negate(ec::multiply(e, 2, p)));

      const PullbackForm ell = pullback_plane(s, tangent_plane(s, seed));
      const FiberLine line = restrict_to_fiber(ell, aff.t);
      CHECK((line.alpha * q.x() + line.beta * q.y() + line.c0).is_zero());
      if (!line.is_vertical()) {
        // Double root at x_P.
        const UniPoly cubic = eliminated_cubic(line, e);
        const UniPoly root = UniPoly({-aff.x, 1});
        CHECK((cubic % root).is_zero());
        CHECK((cubic.derivative() % root).is_zero());
        CHECK((cubic % UniPoly({-q.x(), 1})).is_zero());
      }
    }
  }

  TEST_CASE("transversality examples") {
    const Surface s = Surface::build(dw123);
    const WPoint p = WPoint::parse("[-1:1:-1:1]");
    const auto self = transversality_check(s, p, p);
    CHECK(self.count == 2);
    CHECK(self.count < 3);
    CHECK(self.has_simple_point);

    std::set<unsigned> counts;
    for (const auto& fp : brute_force_oracle(s, {2, 2, 6, 1})) {
      const WPoint r = WPoint::from_affine(fp.t, fp.x, fp.y);
      try {
        counts.insert(transversality_check(s, r, p).count);
      } catch (const DegenerateError&) {
      }
    }
    CHECK(counts.count(3) == 1);
    CHECK_THROWS_AS(transversality_check(s, WPoint::base_point(), p), InputError);
  }

  TEST_CASE("vertical fiber lines meet the fiber at most twice") {
    // The plane X0 + X3 pulls back to xw + w^3; on every fiber, x = -1.
    const Surface s = Surface::build(dw123);
    const PullbackForm ell = pullback_plane(s, PlaneForm{1, 0, 0, 1});
    const FiberLine line = restrict_to_fiber(ell, -1);
    CHECK(line.is_vertical());
    CHECK(line.c0 == Rational(1));
  }
}
