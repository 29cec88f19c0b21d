#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/uni_poly.hpp"
#include "delpezzo/wpoint.hpp"

namespace delpezzo {

/// The nine parameters of y^2 = x^3 + a4(f(z/w)) x w^4 + a6(f(z/w)) w^6 with
/// a4(u) = a u + b, a6(u) = c u^2 + d u + e and f(t) = f0 + f1 t + f2 t^2 + f3 t^3.
struct SurfaceParams {
  Rational a, b, c, d, e;
  std::array<Rational, 4> f;  // f[i] multiplies t^i

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// Binary form sum_i coeffs[i] z^i w^(degree - i).
struct BinaryForm {
  unsigned degree = 0;
  std::vector<Rational> coeffs;  // size degree + 1

  /// Homogenizes `affine` (in t = z/w) to the given degree.
  static BinaryForm homogenize(const UniPoly& affine, unsigned degree);

  Rational evaluate(const Rational& z, const Rational& w) const;
  /// Dehomogenization at w = 1, polynomial in t.
  UniPoly chart_t() const;
  /// Dehomogenization at z = 1, polynomial in s = w/z.
  UniPoly chart_s() const;
  BinaryForm partial_z() const;
  BinaryForm partial_w() const;
  bool is_zero() const;
};

/// Homogeneous degree-12 discriminant Delta(z, w) = -16(4A^3 + 27B^2).
struct DiscriminantForm {
  BinaryForm form;
  UniPoly affine;  // Delta(t, 1)

  /// Coefficient of z^12; equals -432 c^2 f3^4.
  const Rational& z12_coefficient() const { return form.coeffs.back(); }
  bool is_identically_zero() const { return form.is_zero(); }
};

class Surface {
 public:
  /// Throws InputError when f3 = 0.
  static Surface build(const SurfaceParams& params);

  const SurfaceParams& params() const { return params_; }
  /// f(t).
  const UniPoly& f() const { return f_; }
  /// a4(f(t)) and a6(f(t)), the chart-w=1 coefficients.
  const UniPoly& A_affine() const { return A_t_; }
  const UniPoly& B_affine() const { return B_t_; }
  /// A(z, w) (degree 4) and B(z, w) (degree 6).
  const BinaryForm& A_form() const { return A_; }
  const BinaryForm& B_form() const { return B_; }
  /// w^3 f(z/w).
  const BinaryForm& f_form() const { return f_hom_; }

  Rational a4(const Rational& u) const { return params_.a * u + params_.b; }
  Rational a6(const Rational& u) const { return (params_.c * u + params_.d) * u + params_.e; }

  /// y^2 = x^3 + A(z,w) x + B(z,w), exactly.
  bool contains(const WPoint& p) const;

  /// The Weierstrass fiber over t.
  FiberCurve fiber_at(const Rational& t) const;

  DiscriminantForm discriminant_form() const;

 private:
  explicit Surface(SurfaceParams params);

  SurfaceParams params_;
  UniPoly f_;
  UniPoly A_t_;
  UniPoly B_t_;
  BinaryForm A_;
  BinaryForm B_;
  BinaryForm f_hom_;
};

// ---------------------------------------------------------------------------
// Smoothness

enum class Chart { t, s };  // w = 1 (t = z/w) and z = 1 (s = w/z)

std::string to_string(Chart chart);

struct SmoothnessWitness {
  enum class Kind {
    a4_nonzero,  // gcd(Delta, 2AB' - 3A'B) with the roots of A removed
    a4_zero,     // gcd(A, B, B')
  };
  Chart chart = Chart::t;
  Kind kind = Kind::a4_nonzero;
  UniPoly factor;                // monic, non-constant
  std::vector<Rational> rational_roots;
};

struct SmoothnessVerdict {
  enum class Status { smooth, singular, degenerate };
  Status status = Status::smooth;
  std::vector<SmoothnessWitness> witnesses;

  bool is_smooth() const { return status == Status::smooth; }
  bool has_rational_witness() const;
};

/// Decides smoothness of the branch sextic x^3 + A x + B in P(2,1,1) with the
/// two-chart gcd criterion. `degenerate` means Delta is identically zero.
SmoothnessVerdict smoothness_check(const Surface& surface);

/// Result of the exhaustive scan of the branch curve over F_p.
struct ModpVerdict {
  enum class Status { smooth, singular, bad_prime };
  Status status = Status::smooth;
  std::uint64_t p = 0;
  std::size_t points_scanned = 0;
  /// (x, z, w) of the first singular point found.
  std::optional<std::array<std::uint64_t, 3>> singular_point;
};

/// Enumerates the F_p-points of the branch curve (both charts, including
/// w = 0) and evaluates every partial derivative. Throws InputError for even
/// or composite p, or p dividing a parameter denominator.
ModpVerdict modp_singular_scan(const Surface& surface, std::uint64_t p);

/// One prime's comparison between the symbolic verdict and the F_p scan.
struct PrimeComparison {
  std::uint64_t p = 0;
  std::optional<ModpVerdict> scan;  // empty when p divides a denominator
  bool good = false;                // the reduction provably mirrors the Q-verdict
  bool agrees = true;
  std::string note;
};

struct SmoothnessCrossCheck {
  SmoothnessVerdict symbolic;
  std::vector<PrimeComparison> primes;
  bool has_good_prime() const;
};

/// True when reduction mod p provably preserves the symbolic verdict (see
/// PrimeComparison::good). Independent of the F_p scan.
bool is_good_prime(const Surface& surface, const SmoothnessVerdict& verdict, std::uint64_t p);

/// Runs the scan at each prime and compares. A disagreement at a good prime
/// throws IdentityFailure carrying the diagnostics.
SmoothnessCrossCheck cross_validate_smoothness(const Surface& surface, std::span<const std::uint64_t> primes);

// ---------------------------------------------------------------------------
// Singular fibers

struct SingularFiberReport {
  struct Factor {
    UniPoly factor;  // monic squarefree factor of Delta(t, 1)
    unsigned degree = 0;
    unsigned multiplicity = 0;
    unsigned additive_degree = 0;  // how many of its roots also kill A
  };
  DiscriminantForm discriminant;
  std::vector<Factor> factors;
  unsigned multiplicity_at_infinity = 0;
  bool infinity_additive = false;
  unsigned total_multiplicity = 0;
};

/// Squarefree factorization of Delta with multiplicities (infinity included).
/// Throws InputError when the surface is singular, DegenerateError when
/// Delta vanishes identically.
SingularFiberReport singular_fiber_report(const Surface& surface);

}  // namespace delpezzo
