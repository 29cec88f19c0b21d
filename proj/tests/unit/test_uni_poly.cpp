#include <doctest.h>

#include <map>

#include "delpezzo/errors.hpp"
#include "delpezzo/uni_poly.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace delpezzo;

namespace {

const UniPoly t = UniPoly::identity();

UniPoly linear_factor(const Rational& root) {
  // q t - p for root p/q
  return UniPoly({Rational(Integer(-root.numerator())), Rational(root.denominator())});
}

UniPoly random_poly(testgen::Rng& rng, int degree, long h) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(rng.rational(h));
  c.push_back(rng.rational(h, true));
  return UniPoly(c);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("arithmetic examples") {
    CHECK((t + UniPoly{1}) * (t - UniPoly{1}) == t.pow(2) - UniPoly{1});
    CHECK(t.pow(2).compose(t + UniPoly{1}) == UniPoly({1, 2, 1}));
    CHECK((t.pow(3) + (-t.pow(3))).is_zero());
    CHECK((t.pow(3) - t.pow(3)).degree() == UniPoly::kZeroDegree);
    CHECK(UniPoly().degree() == UniPoly::kZeroDegree);
    CHECK(UniPoly({0, 0, 0}).is_zero());
  }

  TEST_CASE("degree of a product") {
    testgen::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      const UniPoly f = random_poly(rng, static_cast<int>(rng.integer(0, 6)), 9);
      const UniPoly g = random_poly(rng, static_cast<int>(rng.integer(0, 6)), 9);
      CHECK((f * g).degree() == f.degree() + g.degree());
    }
  }

  TEST_CASE("gcd examples") {
    CHECK(gcd(t.pow(3), Rational(3) * t.pow(2)) == t.pow(2));
    CHECK(gcd(t.pow(2) - UniPoly{1}, t - UniPoly{1}) == t - UniPoly{1});
    const UniPoly b = UniPoly({3, 0, 0, 2, 0, 0, 1});
    CHECK(gcd(b, UniPoly({0, 0, 6, 0, 0, 6})) == UniPoly{1});
    CHECK(oracle::sylvester_resultant(b, b.derivative()) != Rational(0));
    CHECK_THROWS_AS(gcd(UniPoly(), UniPoly()), InputError);
  }

  TEST_CASE("gcd divides and is divisible by common factors") {
    testgen::Rng rng(5);
    for (int i = 0; i < 60; ++i) {
      const UniPoly common = random_poly(rng, static_cast<int>(rng.integer(0, 3)), 7);
      const UniPoly f = common * random_poly(rng, static_cast<int>(rng.integer(0, 4)), 7);
      const UniPoly g = common * random_poly(rng, static_cast<int>(rng.integer(0, 4)), 7);
      const UniPoly d = gcd(f, g);
      CHECK(d.leading() == Rational(1));
      CHECK((f % d).is_zero());
      CHECK((g % d).is_zero());
      CHECK((d % common.monic()).is_zero());
    }
  }

  TEST_CASE("resultant examples") {
    CHECK(resultant(t - UniPoly{1}, t + UniPoly{1}) == Rational(2));
    CHECK(resultant(t.pow(2) + UniPoly{1}, t) == Rational(1));
    CHECK(resultant(t.pow(2) - UniPoly{2}, t.pow(2) - UniPoly{2}) == Rational(0));
    CHECK_THROWS_AS(resultant(UniPoly(), t), InputError);
  }

  TEST_CASE("resultant agrees with the Sylvester determinant") {
    testgen::Rng rng(7);
    for (int i = 0; i < 60; ++i) {
      const UniPoly f = random_poly(rng, static_cast<int>(rng.integer(0, 5)), 6);
      const UniPoly g = random_poly(rng, static_cast<int>(rng.integer(0, 5)), 6);
      CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
      const bool shared = gcd(f, g).degree() >= 1;
      CHECK((resultant(f, g) == Rational(0)) == shared);
    }
  }

  TEST_CASE("discriminant and separability") {
    CHECK(discriminant(UniPoly({1, 1, 1})) == Rational(-3));
    CHECK(discriminant(t.pow(3)) == Rational(0));
    CHECK(discriminant(t.pow(3) + UniPoly{1}) == Rational(-27));
    CHECK(is_separable(t.pow(3) + UniPoly{1}));
    CHECK_FALSE(is_separable(t.pow(3)));
    CHECK(is_separable(t.pow(2) - UniPoly{2}));
    CHECK_THROWS_AS(discriminant(UniPoly{5}), InputError);
    CHECK_THROWS_AS(is_separable(UniPoly{5}), InputError);

    testgen::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      const UniPoly f = rng.integer(0, 1) ? random_poly(rng, static_cast<int>(rng.integer(2, 3)), 4)
                                          : linear_factor(rng.rational(3)).pow(2) * random_poly(rng, 1, 4);
      CHECK(is_separable(f) == (discriminant(f) != Rational(0)));
    }
  }

  TEST_CASE("squarefree part and decomposition") {
    CHECK(squarefree_part(t.pow(2)) == t);
    const UniPoly f = (t - UniPoly{1}).pow(2) * (t + UniPoly{2});
    CHECK(squarefree_part(f) == ((t - UniPoly{1}) * (t + UniPoly{2})));
    const UniPoly s = t.pow(6) + UniPoly{2};
    CHECK(squarefree_part(Rational(3) * s) == s);

    const UniPoly g = Rational(5) * (t - UniPoly{1}) * (t + UniPoly{3}).pow(2) * (t.pow(2) + UniPoly{1}).pow(3);
    const auto parts = squarefree_decomposition(g);
    UniPoly rebuilt = UniPoly{g.leading()};
    for (const auto& [factor, m] : parts) rebuilt *= factor.pow(m);
    CHECK(rebuilt == g);
    CHECK_THROWS_AS(squarefree_part(UniPoly()), InputError);
  }

  TEST_CASE("rational roots examples") {
    const UniPoly worked({-17, -30, -9, 4});
    const auto roots = rational_roots(worked);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == RootWithMultiplicity{Rational(-1), 2});
    CHECK(roots[1] == RootWithMultiplicity{Rational(17, 4), 1});
    CHECK(distinct_rational_roots(t.pow(3) + UniPoly{1}) == std::vector<Rational>{Rational(-1)});
    CHECK(rational_roots(t.pow(3) + UniPoly{2}).empty());
    CHECK(rational_roots(t.pow(3) * (t - UniPoly{2})) ==
          std::vector<RootWithMultiplicity>{{Rational(0), 3}, {Rational(2), 1}});
    CHECK_THROWS_AS(rational_roots(UniPoly()), InputError);
  }

  TEST_CASE("rational roots by construction, both strategies") {
    testgen::Rng rng(13);
    for (int i = 0; i < 80; ++i) {
      std::map<Rational, unsigned> expected;
      UniPoly f = UniPoly{rng.rational(20, true)};
      const int n = static_cast<int>(rng.integer(1, 4));
      for (int k = 0; k < n; ++k) {
        const Rational r = rng.rational(30);
        f *= linear_factor(r);
        ++expected[r];
      }
      // an irreducible quadratic carries no rational roots
      if (rng.integer(0, 1)) f *= t.pow(2) + UniPoly{Rational(rng.integer(1, 9))};
      for (auto strategy : {RootStrategy::divisors, RootStrategy::isolation, RootStrategy::automatic}) {
        const auto roots = rational_roots(f, strategy);
        std::map<Rational, unsigned> got;
        for (const auto& [r, m] : roots) {
          CHECK(oracle::evaluate_naive(f, r) == Rational(0));
          got[r] = m;
        }
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("isolation handles large coefficients") {
    const Rational big = Rational::parse("123456789012345678901/98765432109876543");
    const UniPoly f = linear_factor(big) * linear_factor(Rational(-7, 3)) * (t.pow(2) + UniPoly{5});
    const auto roots = rational_roots(f, RootStrategy::isolation);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root == Rational(-7, 3));
    CHECK(roots[1].root == big);
  }
}
