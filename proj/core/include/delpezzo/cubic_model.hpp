#pragma once

#include <array>
#include <string>
#include <vector>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/multi_poly.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/surface.hpp"
#include "delpezzo/uni_poly.hpp"
#include "delpezzo/wpoint.hpp"

namespace delpezzo {

/// Point of P^3 with coprime integer coordinates. Not sign-normalized.
struct P3Point {
  std::array<Integer, 4> coords;

  /// Clears denominators and divides by the content; throws InputError for
  /// the zero vector.
  static P3Point from_rational(const std::array<Rational, 4>& v);
  std::array<Rational, 4> as_rational() const;
  /// Same projective point (equal up to a nonzero scalar).
  bool proportional(const P3Point& other) const;
  std::string to_string() const;

  friend bool operator==(const P3Point&, const P3Point&) = default;
};

/// The hyperplane alpha X0 + beta X1 + gamma X2 + delta X3 = 0.
struct PlaneForm {
  Rational alpha, beta, gamma, delta;

  Rational evaluate(const std::array<Rational, 4>& X) const;
  bool is_zero() const { return alpha.is_zero() && beta.is_zero() && gamma.is_zero() && delta.is_zero(); }
  friend bool operator==(const PlaneForm&, const PlaneForm&) = default;
};

/// The singular cubic surface W in P^3 and its defining form F_W.
class CubicW {
 public:
  explicit CubicW(const Surface& surface);

  const MultiPoly<Rational>& form() const { return F_; }
  Rational evaluate(const std::array<Rational, 4>& X) const;
  bool contains(const P3Point& p) const;
  std::array<Rational, 4> gradient(const std::array<Rational, 4>& X) const;
  bool is_singular_at(const P3Point& p) const;

 private:
  MultiPoly<Rational> F_;
  std::array<MultiPoly<Rational>, 4> partials_;
};

/// [x:y:z:w] -> [xw : y : w^3 f(z/w) : w^3]. Throws InputError off the surface.
P3Point theta(const Surface& surface, const WPoint& p);

/// Gradient of F_W at theta(P). Throws InputError off the surface and
/// DegenerateError when theta(P) is a singular point of W.
PlaneForm tangent_plane(const Surface& surface, const WPoint& p);

/// Weighted cubic alpha xw + beta y + gamma w^3 f(z/w) + delta w^3 cut out on S
/// by the pullback of a plane.
struct PullbackForm {
  PlaneForm plane;
  UniPoly f;  // f(t), so that w^3 f(z/w) is the homogenization

  Rational evaluate(const WPoint& p) const;
  /// Expanded in x, y, z, w, e.g. "3xw - 2y + 5w^3".
  std::string to_string() const;
};

PullbackForm pullback_plane(const Surface& surface, const PlaneForm& plane);

/// The affine line alpha x + beta y + c0 = 0 in Weierstrass coordinates.
struct FiberLine {
  Rational t;
  Rational alpha, beta, c0;

  bool is_vertical() const { return beta.is_zero(); }
  friend bool operator==(const FiberLine&, const FiberLine&) = default;
};

FiberLine restrict_to_fiber(const PullbackForm& ell, const Rational& t);

/// beta^2 (x^3 + A x + B) - (alpha x + c0)^2, whose roots are the x-coordinates
/// of the affine intersection. Requires a non-vertical line.
UniPoly eliminated_cubic(const FiberLine& line, const FiberCurve& fiber);

/// The third intersection of the fiber with the tangent-plane section at P.
/// Throws InputError when P is off S or has w = 0, DegenerateError when P is
/// 2-torsion or theta(P) is singular, and IdentityFailure when the result
/// disagrees with -[2]P.
ECPoint tangent_point(const Surface& surface, const WPoint& p);

struct TransversalityResult {
  FiberLine line;
  /// Distinct affine intersection points of C_R with the fiber of P (O excluded).
  unsigned count = 0;
  /// Some affine intersection point has multiplicity one.
  bool has_simple_point = false;
  UniPoly eliminated;  // empty for vertical lines
};

/// Throws InputError unless R and P lie on S with w != 0 and the fiber of P is
/// smooth, DegenerateError when the line vanishes identically on the fiber.
TransversalityResult transversality_check(const Surface& surface, const WPoint& r, const WPoint& p);

// ---------------------------------------------------------------------------
// Singularities of W

enum class SingularityType { two_A2, A5, E6 };

std::string to_string(SingularityType type);

struct NormalFormBranch {
  std::string substitution;  // "a.i", "a.ii", "b" or "c"
  int sign = 1;              // choice of square root
  bool shape_ok = false;     // F_W(sub) = X0 X1 X3 + G (X0^2 X3 + G for E6), G free of X3
  bool condition_ok = false; // the local type test on G
  std::string G;
};

struct NormalFormCheck {
  SingularityType type = SingularityType::two_A2;
  bool root_rational = true;  // sqrt(c), or sqrt(d) for E6
  std::vector<NormalFormBranch> branches;
  bool verified() const;
};

struct SingularityReport {
  SingularityType type = SingularityType::two_A2;
  std::string locus;                 // "[0:±√c:1:0]" with c substituted
  std::vector<std::string> points;   // rational points only
  bool sqrt_c_rational = true;
  bool identity_verified = false;
};

/// Runs the case substitution into F_W over Q or Q(sqrt D). Throws
/// DegenerateError when a = c = d = 0.
NormalFormCheck verify_normal_form(const Surface& surface);

SingularityReport classify_singularities(const Surface& surface);

}  // namespace delpezzo
