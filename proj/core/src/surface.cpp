#include "delpezzo/surface.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

BinaryForm BinaryForm::homogenize(const UniPoly& affine, unsigned degree) {
  if (affine.degree() > static_cast<int>(degree)) {
    throw InputError("homogenize: polynomial degree exceeds the form degree");
  }
  BinaryForm out;
  out.degree = degree;
  out.coeffs.reserve(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) out.coeffs.push_back(affine.coefficient(i));
  return out;
}

Rational BinaryForm::evaluate(const Rational& z, const Rational& w) const {
  Rational acc(0);
  std::vector<Rational> zp(degree + 1, Rational(1));
  std::vector<Rational> wp(degree + 1, Rational(1));
  for (unsigned i = 1; i <= degree; ++i) {
    zp[i] = zp[i - 1] * z;
    wp[i] = wp[i - 1] * w;
  }
  for (unsigned i = 0; i <= degree; ++i) {
    if (!coeffs[i].is_zero()) acc += coeffs[i] * zp[i] * wp[degree - i];
  }
  return acc;
}

UniPoly BinaryForm::chart_t() const { return UniPoly(coeffs); }

UniPoly BinaryForm::chart_s() const {
  return UniPoly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

BinaryForm BinaryForm::partial_z() const {
  BinaryForm out;
  if (degree == 0) return {0, {Rational(0)}};
  out.degree = degree - 1;
  for (unsigned i = 1; i <= degree; ++i) out.coeffs.push_back(Rational(static_cast<long>(i)) * coeffs[i]);
  return out;
}

BinaryForm BinaryForm::partial_w() const {
  BinaryForm out;
  if (degree == 0) return {0, {Rational(0)}};
  out.degree = degree - 1;
  for (unsigned i = 0; i < degree; ++i) {
    out.coeffs.push_back(Rational(static_cast<long>(degree - i)) * coeffs[i]);
  }
  return out;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Surface::Surface(SurfaceParams params) : params_(std::move(params)) {
  f_ = UniPoly({params_.f[0], params_.f[1], params_.f[2], params_.f[3]});
  const UniPoly a4({params_.b, params_.a});
  const UniPoly a6({params_.e, params_.d, params_.c});
  A_t_ = a4.compose(f_);
  B_t_ = a6.compose(f_);
  A_ = BinaryForm::homogenize(A_t_, 4);
  B_ = BinaryForm::homogenize(B_t_, 6);
  f_hom_ = BinaryForm::homogenize(f_, 3);
}

Surface Surface::build(const SurfaceParams& params) {
  if (params.f[3].is_zero()) throw InputError("surface: f must be a cubic (f3 != 0)");
  return Surface(params);
}

bool Surface::contains(const WPoint& p) const {
  const Rational x(p.x());
  const Rational y(p.y());
  const Rational z(p.z());
  const Rational w(p.w());
  return y * y == x * x * x + A_.evaluate(z, w) * x + B_.evaluate(z, w);
}

FiberCurve Surface::fiber_at(const Rational& t) const {
  const Rational u = f_(t);
  return FiberCurve{t, a4(u), a6(u)};
}

DiscriminantForm Surface::discriminant_form() const {
  const UniPoly core = Rational(4) * A_t_.pow(3) + Rational(27) * B_t_.pow(2);
  DiscriminantForm out;
  out.affine = Rational(-16) * core;
  out.form = BinaryForm::homogenize(out.affine, 12);
  return out;
}

SingularFiberReport singular_fiber_report(const Surface& surface) {
  SingularFiberReport report;
  report.discriminant = surface.discriminant_form();
  if (report.discriminant.is_identically_zero()) {
    throw DegenerateError("singular fiber report: discriminant vanishes identically");
  }
  if (!smoothness_check(surface).is_smooth()) {
    throw InputError("singular fiber report: surface is singular");
  }
  const UniPoly& A = surface.A_affine();
  const UniPoly& delta = report.discriminant.affine;
  unsigned total = 0;
  if (!delta.is_constant()) {
    for (auto& [factor, multiplicity] : squarefree_decomposition(delta)) {
      SingularFiberReport::Factor entry;
      entry.degree = static_cast<unsigned>(factor.degree());
      entry.multiplicity = multiplicity;
      entry.additive_degree = A.is_zero() ? entry.degree : static_cast<unsigned>(gcd(factor, A).degree());
      entry.factor = std::move(factor);
      total += entry.degree * entry.multiplicity;
      report.factors.push_back(std::move(entry));
    }
  }
  report.multiplicity_at_infinity = 12u - static_cast<unsigned>(delta.degree());
  report.infinity_additive =
      report.multiplicity_at_infinity > 0 && surface.A_form().coeffs.back().is_zero();
  report.total_multiplicity = total + report.multiplicity_at_infinity;
  return report;
}

}  // namespace delpezzo
