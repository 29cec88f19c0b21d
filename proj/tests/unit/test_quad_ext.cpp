#include <doctest.h>

#include "delpezzo/errors.hpp"
#include "delpezzo/quad_ext.hpp"
#include "random_inputs.hpp"

using delpezzo::QuadExt;
using delpezzo::Rational;

TEST_SUITE("exact_algebra") {
  TEST_CASE("quadratic extension examples") {
    const Rational two(2);
    const QuadExt a(1, 1, two);
    const QuadExt b(1, -1, two);
    CHECK(a * b == QuadExt::embed(-1, two));

    const Rational c(7);
    CHECK(QuadExt::root(c) * QuadExt::root(c) == QuadExt::embed(c, c));

    const QuadExt inv = QuadExt::embed(1, two) / a;
    CHECK(inv == QuadExt(-1, 1, two));
    CHECK(inv * a == QuadExt::embed(1, two));
  }

  TEST_CASE("square radicands are rejected") {
    CHECK_THROWS_AS(QuadExt(1, 1, Rational(4)), delpezzo::InputError);
    CHECK_THROWS_AS(QuadExt(1, 1, Rational(9, 4)), delpezzo::InputError);
    CHECK_THROWS_AS(QuadExt(1, 1, Rational(0)), delpezzo::InputError);
  }

  TEST_CASE("mismatched contexts and zero division") {
    const QuadExt a(1, 1, Rational(2));
    const QuadExt b(1, 1, Rational(3));
    CHECK_THROWS_AS(a + b, delpezzo::InputError);
    CHECK_THROWS_AS(a * b, delpezzo::InputError);
    CHECK_THROWS_AS(a / QuadExt::embed(0, Rational(2)), delpezzo::InputError);
  }

  TEST_CASE("conjugate and norm") {
    const QuadExt a(Rational(3, 2), Rational(-5), Rational(-3));
    CHECK(a.conjugate() == QuadExt(Rational(3, 2), Rational(5), Rational(-3)));
    CHECK(a * a.conjugate() == QuadExt::embed(a.norm(), Rational(-3)));
  }

  TEST_CASE("field axioms and inverses on samples") {
    testgen::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
      Rational d = rng.small_integer(30, true);
      if (delpezzo::is_square(d)) d = d * Rational(2) + Rational(0);
      if (delpezzo::is_square(d)) continue;
      const QuadExt x(rng.rational(20), rng.rational(20), d);
      const QuadExt y(rng.rational(20), rng.rational(20), d);
      const QuadExt z(rng.rational(20), rng.rational(20), d);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - y) + y == x);
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == QuadExt::embed(1, d));
      }
    }
  }
}
