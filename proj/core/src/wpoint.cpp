#include "delpezzo/wpoint.hpp"

#include <vector>

#include "delpezzo/errors.hpp"
#include "delpezzo/number_theory.hpp"

namespace delpezzo {

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

std::strong_ordering compare(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

WPoint WPoint::make(Integer x, Integer y, Integer z, Integer w) {
  if (x == 0 && y == 0 && z == 0 && w == 0) throw InputError("[0:0:0:0] is not a point");

  if (z == 0 && w == 0 && x != 0 && y != 0 && y * y == x * x * x) {
    // [m^2 : m^3 : 0 : 0] ~ [1:1:0:0] through lambda = y/x.
    return WPoint(1, 1, 0, 0);
  }

  // Any admissible scale divides g.
  Integer g = gcd(z, w);
  if (g == 0) g = gcd(x, y);
  g = abs(g);
  if (g > 1) {
    for (const auto& [p, e] : factorize(g)) {
      const Integer p2 = p * p;
      const Integer p3 = p2 * p;
      while (divides(p, z) && divides(p, w) && divides(p2, x) && divides(p3, y)) {
        z /= p;
        w /= p;
        x /= p2;
        y /= p3;
      }
    }
  }

  bool flip = false;
  if (w != 0) {
    flip = w < 0;
  } else if (z != 0) {
    flip = z < 0;
  } else {
    flip = y < 0;
  }
  if (flip) {
    y = -y;
    z = -z;
    w = -w;
  }
  return WPoint(std::move(x), std::move(y), std::move(z), std::move(w));
}

WPoint WPoint::make_rational(const Rational& x, const Rational& y, const Rational& z, const Rational& w) {
  Integer l = lcm(lcm(x.denominator(), y.denominator()), lcm(z.denominator(), w.denominator()));
  const Rational s(l);
  const Rational s2 = s * s;
  const Rational s3 = s2 * s;
  auto as_int = [](const Rational& r) { return r.numerator(); };
  return make(as_int(x * s2), as_int(y * s3), as_int(z * s), as_int(w * s));
}

WPoint WPoint::from_affine(const Rational& t, const Rational& x, const Rational& y) {
  const Integer& z = t.numerator();
  const Integer& w = t.denominator();
  const Rational wr(w);
  const Rational xs = x * wr * wr;
  const Rational ys = y * wr * wr * wr;
  if (xs.is_integer() && ys.is_integer()) {
    return make(xs.numerator(), ys.numerator(), z, w);
  }
  // Weierstrass-shaped denominators s^2, s^3 give the minimal scale directly;
  // w > 0 and s > 0 keep the sign convention.
  auto s = xs.is_integer() ? exact_cbrt(ys.denominator()) : exact_sqrt(xs.denominator());
  if (s) {
    const Integer s2 = *s * *s;
    const Integer s3 = s2 * *s;
    if (divides(xs.denominator(), s2) && divides(ys.denominator(), s3)) {
      return WPoint(Integer(xs.numerator() * (s2 / xs.denominator())),
                    Integer(ys.numerator() * (s3 / ys.denominator())), Integer(z * *s), Integer(w * *s));
    }
  }
  return make_rational(xs, ys, Rational(z), Rational(w));
}

WPoint WPoint::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw InputError("point must look like [x:y:z:w], got '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = s.find(':', start);
    parts.push_back(Rational::parse(s.substr(start, colon == std::string_view::npos ? s.npos : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) throw InputError("point needs four coordinates: '" + std::string(text) + "'");
  return make_rational(parts[0], parts[1], parts[2], parts[3]);
}

std::optional<AffineData> WPoint::affine() const {
  if (w_ == 0) return std::nullopt;
  const Rational w(w_);
  return AffineData{Rational(z_, w_), Rational(x_) / (w * w), Rational(y_) / (w * w * w)};
}

std::string WPoint::to_string() const {
  return "[" + x_.get_str() + ":" + y_.get_str() + ":" + z_.get_str() + ":" + w_.get_str() + "]";
}

std::strong_ordering operator<=>(const WPoint& lhs, const WPoint& rhs) {
  if (auto c = compare(lhs.w_, rhs.w_); c != 0) return c;
  if (auto c = compare(lhs.z_, rhs.z_); c != 0) return c;
  if (auto c = compare(lhs.x_, rhs.x_); c != 0) return c;
  return compare(lhs.y_, rhs.y_);
}

}  // namespace delpezzo
