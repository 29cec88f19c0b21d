#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Dense univariate polynomial over Q. Coefficients are indexed by degree and
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// The monomial t.
  static UniPoly identity() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of t^i (zero past the degree).
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& t) const { return evaluate(t); }
  Rational evaluate(const Rational& t) const;

  UniPoly derivative() const;
  /// Scales to leading coefficient 1. Zero stays zero.
  UniPoly monic() const;
  /// this(inner(t)).
  UniPoly compose(const UniPoly& inner) const;
  /// t^deg * this(1/t) for the given nominal degree (deg >= degree()).
  UniPoly reversed(std::size_t nominal_degree) const;

  /// Euclidean division; throws InputError for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rational& lhs, UniPoly rhs) { return rhs *= lhs; }
  friend UniPoly operator/(const UniPoly& lhs, const UniPoly& rhs) { return lhs.divmod(rhs).first; }
  friend UniPoly operator%(const UniPoly& lhs, const UniPoly& rhs) { return lhs.divmod(rhs).second; }
  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

  UniPoly pow(unsigned exponent) const;

  /// Primitive integer polynomial proportional to this one, with positive
  /// leading coefficient. Empty for the zero polynomial.
  std::vector<Integer> primitive_integer() const;

  std::string to_string(const std::string& var = "t") const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.to_string(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd by a primitive (fraction-free) remainder sequence over Z.
/// Throws InputError when both inputs are zero.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

/// Res(f, g). Throws InputError for a zero input.
Rational resultant(const UniPoly& f, const UniPoly& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f). Throws InputError for constants.
Rational discriminant(const UniPoly& f);

/// gcd(f, f') = 1. Throws InputError for constants.
bool is_separable(const UniPoly& f);

/// f / gcd(f, f'), monic. Throws InputError for zero.
UniPoly squarefree_part(const UniPoly& f);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, non-constant
  unsigned multiplicity = 0;
};

/// Yun decomposition f = lc * prod factor_i^i. Throws InputError for zero.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

struct RootWithMultiplicity {
  Rational root;
  unsigned multiplicity = 0;
  friend bool operator==(const RootWithMultiplicity&, const RootWithMultiplicity&) = default;
};

enum class RootStrategy {
  automatic,   // divisors when coefficients are small, isolation otherwise
  divisors,    // enumerate p/q with p | a_0, q | a_n
  isolation,   // Sturm isolation of integer roots of the monic transform
};

/// All rational roots with multiplicities, ascending. Throws InputError for zero.
std::vector<RootWithMultiplicity> rational_roots(const UniPoly& f,
                                                 RootStrategy strategy = RootStrategy::automatic);

/// Distinct rational roots only, ascending.
std::vector<Rational> distinct_rational_roots(const UniPoly& f);

}  // namespace delpezzo
