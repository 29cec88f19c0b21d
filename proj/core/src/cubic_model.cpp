#include "delpezzo/cubic_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

Exponents mono(unsigned e0, unsigned e1, unsigned e2, unsigned e3) { return Exponents{e0, e1, e2, e3}; }

std::array<Rational, 4> affine_lift(const WPoint& p) {
  return {Rational(p.x()), Rational(p.y()), Rational(p.z()), Rational(p.w())};
}

void require_on_surface(const Surface& surface, const WPoint& p, const char* where) {
  if (!surface.contains(p)) throw InputError(std::string(where) + ": point " + p.to_string() + " is not on S");
}

AffineData require_affine(const WPoint& p, const char* where) {
  auto aff = p.affine();
  if (!aff) throw InputError(std::string(where) + ": point " + p.to_string() + " has w = 0");
  return *aff;
}

}  // namespace

P3Point P3Point::from_rational(const std::array<Rational, 4>& v) {
  Integer den = 1;
  for (const auto& r : v) den = lcm(den, r.denominator());
  P3Point out;
  Integer content = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out.coords[i] = v[i].numerator() * (den / v[i].denominator());
    content = gcd(content, out.coords[i]);
  }
  if (content == 0) throw InputError("P3Point: all coordinates are zero");
  for (auto& c : out.coords) c /= content;
  return out;
}

std::array<Rational, 4> P3Point::as_rational() const {
  return {Rational(coords[0]), Rational(coords[1]), Rational(coords[2]), Rational(coords[3])};
}

bool P3Point::proportional(const P3Point& other) const {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (coords[i] * other.coords[j] != coords[j] * other.coords[i]) return false;
    }
  }
  return true;
}

std::string P3Point::to_string() const {
  std::ostringstream os;
  os << '[' << coords[0].get_str() << ':' << coords[1].get_str() << ':' << coords[2].get_str() << ':'
     << coords[3].get_str() << ']';
  return os.str();
}

Rational PlaneForm::evaluate(const std::array<Rational, 4>& X) const {
  return alpha * X[0] + beta * X[1] + gamma * X[2] + delta * X[3];
}

CubicW::CubicW(const Surface& surface) : F_(4), partials_{F_, F_, F_, F_} {
  const auto& s = surface.params();
  F_.add_term(mono(3, 0, 0, 0), Rational(1));
  F_.add_term(mono(1, 0, 1, 1), s.a);
  F_.add_term(mono(1, 0, 0, 2), s.b);
  F_.add_term(mono(0, 0, 2, 1), s.c);
  F_.add_term(mono(0, 0, 1, 2), s.d);
  F_.add_term(mono(0, 0, 0, 3), s.e);
  F_.add_term(mono(0, 2, 0, 1), Rational(-1));
  for (std::size_t i = 0; i < 4; ++i) partials_[i] = F_.partial(i);
}

Rational CubicW::evaluate(const std::array<Rational, 4>& X) const {
  return F_.evaluate({X.begin(), X.end()}, Rational(0));
}

bool CubicW::contains(const P3Point& p) const { return evaluate(p.as_rational()).is_zero(); }

std::array<Rational, 4> CubicW::gradient(const std::array<Rational, 4>& X) const {
  const std::vector<Rational> pt(X.begin(), X.end());
  return {partials_[0].evaluate(pt, Rational(0)), partials_[1].evaluate(pt, Rational(0)),
          partials_[2].evaluate(pt, Rational(0)), partials_[3].evaluate(pt, Rational(0))};
}

bool CubicW::is_singular_at(const P3Point& p) const {
  const auto g = gradient(p.as_rational());
  return std::all_of(g.begin(), g.end(), [](const Rational& r) { return r.is_zero(); });
}

P3Point theta(const Surface& surface, const WPoint& p) {
  require_on_surface(surface, p, "theta");
  const auto [x, y, z, w] = affine_lift(p);
  return P3Point::from_rational({x * w, y, surface.f_form().evaluate(z, w), w * w * w});
}

PlaneForm tangent_plane(const Surface& surface, const WPoint& p) {
  const P3Point image = theta(surface, p);
  const auto g = CubicW(surface).gradient(image.as_rational());
  PlaneForm plane{g[0], g[1], g[2], g[3]};
  if (plane.is_zero()) {
    throw DegenerateError("tangent plane: theta(P) = " + image.to_string() + " is a singular point of W");
  }
  return plane;
}

Rational PullbackForm::evaluate(const WPoint& p) const {
  const auto [x, y, z, w] = affine_lift(p);
  return plane.alpha * x * w + plane.beta * y + plane.gamma * BinaryForm::homogenize(f, 3).evaluate(z, w) +
         plane.delta * w * w * w;
}

std::string PullbackForm::to_string() const {
  // (coefficient, monomial) in display order
  std::vector<std::pair<Rational, std::string>> terms{{plane.alpha, "xw"}, {plane.beta, "y"}};
  static const char* const zw[4] = {"w^3", "zw^2", "z^2w", "z^3"};
  for (int i = 3; i >= 0; --i) {
    Rational coeff = plane.gamma * f.coefficient(static_cast<std::size_t>(i));
    if (i == 0) coeff += plane.delta;
    terms.emplace_back(coeff, zw[i]);
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, m] : terms) {
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
    os << m;
    first = false;
  }
  return first ? "0" : os.str();
}

PullbackForm pullback_plane(const Surface& surface, const PlaneForm& plane) { return {plane, surface.f()}; }

FiberLine restrict_to_fiber(const PullbackForm& ell, const Rational& t) {
  return {t, ell.plane.alpha, ell.plane.beta, ell.plane.gamma * ell.f(t) + ell.plane.delta};
}

UniPoly eliminated_cubic(const FiberLine& line, const FiberCurve& fiber) {
  if (line.is_vertical()) throw InputError("eliminated cubic: vertical line");
  const Rational b2 = line.beta * line.beta;
  return UniPoly({b2 * fiber.B - line.c0 * line.c0, b2 * fiber.A - Rational(2) * line.alpha * line.c0,
                  -(line.alpha * line.alpha), b2});
}

ECPoint tangent_point(const Surface& surface, const WPoint& p) {
  require_on_surface(surface, p, "tangent point");
  const AffineData aff = require_affine(p, "tangent point");
  const FiberCurve fiber = surface.fiber_at(aff.t);
  if (aff.y.is_zero()) {
    throw DegenerateError("tangent point: " + p.to_string() + " is 2-torsion on its fiber");
  }
  const FiberLine line = restrict_to_fiber(pullback_plane(surface, tangent_plane(surface, p)), aff.t);
  if (line.is_vertical()) throw IdentityFailure("tangent point: vertical tangent at a point with y != 0");

  const Rational slope = line.alpha / line.beta;
  const Rational xq = slope * slope - Rational(2) * aff.x;
  const Rational yq = -(line.alpha * xq + line.c0) / line.beta;
  const ECPoint q(xq, yq);

  const ECPoint expected = ec::negate(ec::multiply(fiber, 2, ECPoint(aff.x, aff.y)));
  if (!ec::on_curve(fiber, q) || !(q == expected)) {
    throw IdentityFailure("tangent point: " + q.to_string() + " differs from -[2]P = " + expected.to_string());
  }
  return q;
}

TransversalityResult transversality_check(const Surface& surface, const WPoint& r, const WPoint& p) {
  require_on_surface(surface, r, "transversality");
  require_on_surface(surface, p, "transversality");
  require_affine(r, "transversality");
  const AffineData aff = require_affine(p, "transversality");
  const FiberCurve fiber = surface.fiber_at(aff.t);
  if (fiber.is_singular()) throw InputError("transversality: the fiber of P is singular");

  TransversalityResult out;
  out.line = restrict_to_fiber(pullback_plane(surface, tangent_plane(surface, r)), aff.t);
  const FiberLine& line = out.line;
  if (line.alpha.is_zero() && line.beta.is_zero()) {
    if (line.c0.is_zero()) throw DegenerateError("transversality: the section contains the whole fiber");
    return out;  // meets the fiber only at O
  }
  if (line.is_vertical()) {
    const Rational x0 = -line.c0 / line.alpha;
    const bool branch_point = fiber.rhs(x0).is_zero();
    out.count = branch_point ? 1 : 2;
    out.has_simple_point = !branch_point;
    return out;
  }
  out.eliminated = eliminated_cubic(line, fiber);
  for (const auto& [factor, multiplicity] : squarefree_decomposition(out.eliminated)) {
    out.count += static_cast<unsigned>(factor.degree());
    if (multiplicity == 1) out.has_simple_point = true;
  }
  return out;
}

}  // namespace delpezzo
