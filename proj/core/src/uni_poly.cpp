#include "delpezzo/uni_poly.hpp"

#include <algorithm>
#include <set>

#include "delpezzo/errors.hpp"
#include "delpezzo/number_theory.hpp"

namespace delpezzo {

namespace {

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly primitive_part(IntPoly p) {
  trim_int(p);
  if (p.empty()) return p;
  Integer content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (p.back() < 0) content = -content;
  for (auto& c : p) c /= content;
  return p;
}

// Pseudo-remainder of a by b (b nonzero), scaled by powers of lc(b).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  trim_int(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

UniPoly from_integers(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// sign of p(x) for integer polynomial p at x = k/2 (k odd).
int sign_at_half(const IntPoly& p, const Integer& k) {
  if (p.empty()) return 0;
  const std::size_t n = p.size() - 1;
  // Horner on sum p_i k^i 2^(n-i).
  Integer acc = p[n];
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * k + p[i] * (Integer(1) << static_cast<mp_bitcnt_t>(n - i));
  }
  return sgn(acc);
}

Integer eval_int(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// q^n p(num/q) as an integer.
Integer eval_homogenized(const IntPoly& p, const Integer& num, const Integer& den) {
  const std::size_t n = p.size() - 1;
  Integer acc = 0;
  Integer den_pow = 1;
  std::vector<Integer> den_powers(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    den_powers[i] = den_pow;
    den_pow *= den;
  }
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_powers[n - i];
  }
  return acc;
}

class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& h) {
    UniPoly prev = from_integers(h);
    UniPoly cur = prev.derivative();
    seq_.push_back(h);
    seq_.push_back(cur.primitive_integer());
    while (cur.degree() > 0) {
      UniPoly next = -(prev % cur);
      if (next.is_zero()) break;
      prev = std::move(cur);
      cur = std::move(next);
      seq_.push_back(positive_scaled(cur));
    }
  }

  int variations_at_half(const Integer& k) const {
    int changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
      const int sg = sign_at_half(s, k);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

 private:
  // Integer polynomial with the same signs as f everywhere.
  static IntPoly positive_scaled(const UniPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coefficients()) l = lcm(l, c.denominator());
    IntPoly out;
    for (const auto& c : f.coefficients()) out.emplace_back(c.numerator() * (l / c.denominator()));
    Integer content = 0;
    for (const auto& c : out) content = gcd(content, c);
    for (auto& c : out) c /= content;
    return out;
  }

  std::vector<IntPoly> seq_;
};

// Integer roots of a monic squarefree integer polynomial.
std::vector<Integer> integer_roots_by_isolation(const IntPoly& h) {
  std::vector<Integer> roots;
  if (h.size() < 2) return roots;
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) bound = std::max(bound, Integer(abs(h[i])));
  bound += 1;
  const SturmSequence sturm(h);
  // Intervals (lo/2, hi/2) with odd lo, hi; half-integers are never roots.
  struct Interval {
    Integer lo, hi;
    int v_lo, v_hi;
  };
  const Integer lo0 = -2 * bound - 1;
  const Integer hi0 = 2 * bound + 1;
  std::vector<Interval> stack{{lo0, hi0, sturm.variations_at_half(lo0), sturm.variations_at_half(hi0)}};
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.v_lo - iv.v_hi <= 0) continue;
    if (iv.hi - iv.lo == 2) {
      Integer candidate = (iv.lo + 1) / 2;
      if (eval_int(h, candidate) == 0) roots.push_back(candidate);
      continue;
    }
    Integer mid = (iv.lo + iv.hi) / 2;
    if (mpz_even_p(mid.get_mpz_t()) != 0) mid += 1;
    if (mid >= iv.hi) mid -= 2;
    const int v_mid = sturm.variations_at_half(mid);
    stack.push_back({iv.lo, mid, iv.v_lo, v_mid});
    stack.push_back({mid, iv.hi, v_mid, iv.v_hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> roots_by_isolation(const IntPoly& g) {
  // g primitive, g(0) != 0. Rational roots of g are y/L for integer roots y of
  // the monic h(y) = L^{n-1} g(y/L).
  const IntPoly sqf = squarefree_part(from_integers(g)).primitive_integer();
  const std::size_t n = sqf.size() - 1;
  const Integer& lead = sqf.back();
  IntPoly h(n + 1);
  Integer scale = 1;  // L^{n-1-i}, built from the top down
  h[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    h[i] = sqf[i] * scale;
    scale *= lead;
  }
  std::vector<Rational> out;
  for (const auto& y : integer_roots_by_isolation(h)) out.emplace_back(y, lead);
  return out;
}

std::vector<Rational> roots_by_divisors(const IntPoly& g) {
  const std::vector<Integer> ps = positive_divisors(g.front());
  const std::vector<Integer> qs = positive_divisors(g.back());
  std::set<Rational> found;
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      if (gcd(p, q) != 1) continue;
      for (const Integer& num : {p, Integer(-p)}) {
        if (eval_homogenized(g, num, q) == 0) found.emplace(num, q);
      }
    }
  }
  return {found.begin(), found.end()};
}

bool divisor_route_is_cheap(const IntPoly& g) {
  constexpr std::size_t kMaxBits = 62;
  return bit_length(g.front()) <= kMaxBits && bit_length(g.back()) <= kMaxBits;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= t;
    acc += coeffs_[i];
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  return *this * inv;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= inner;
    acc += UniPoly::constant(coeffs_[i]);
  }
  return acc;
}

UniPoly UniPoly::reversed(std::size_t nominal_degree) const {
  if (degree() > static_cast<int>(nominal_degree)) {
    throw InputError("reversed: nominal degree below actual degree");
  }
  std::vector<Rational> r(nominal_degree + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[nominal_degree - i] = coeffs_[i];
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly{}, *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational inv_lead = divisor.leading().inverse();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] * inv_lead;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::vector<Integer> UniPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) l = lcm(l, c.denominator());
  IntPoly out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.numerator() * (l / c.denominator()));
  return primitive_part(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  IntPoly a = f.primitive_integer();
  IntPoly b = g.primitive_integer();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return from_integers(a).monic();
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("resultant of a zero polynomial");
  const long m = f.degree();
  const long n = g.degree();
  if (n == 0) return g.leading().pow(m);
  if (m == 0) return f.leading().pow(n);
  const Rational sign((m * n) % 2 == 0 ? 1 : -1);
  if (m < n) return sign * resultant(g, f);
  const UniPoly r = f % g;
  if (r.is_zero()) return Rational(0);
  return sign * g.leading().pow(m - r.degree()) * resultant(g, r);
}

Rational discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw InputError("discriminant of a constant polynomial");
  const long n = f.degree();
  const Rational sign(((n * (n - 1)) / 2) % 2 == 0 ? 1 : -1);
  return sign * resultant(f, f.derivative()) / f.leading();
}

bool is_separable(const UniPoly& f) {
  if (f.degree() < 1) throw InputError("separability of a constant polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw InputError("squarefree part of zero");
  if (f.degree() == 0) return UniPoly::constant(Rational(1));
  return (f / gcd(f, f.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw InputError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const UniPoly fm = f.monic();
  const UniPoly df = fm.derivative();
  const UniPoly a0 = gcd(fm, df);
  UniPoly b = fm / a0;
  UniPoly c = df / a0;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const UniPoly a = d.is_zero() ? b.monic() : gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<RootWithMultiplicity> rational_roots(const UniPoly& f, RootStrategy strategy) {
  if (f.is_zero()) throw InputError("rational roots of the zero polynomial");
  std::vector<RootWithMultiplicity> out;
  if (f.degree() < 1) return out;
  IntPoly g = f.primitive_integer();
  std::size_t zero_mult = 0;
  while (g.front() == 0) {
    g.erase(g.begin());
    ++zero_mult;
  }
  std::vector<Rational> distinct;
  if (g.size() > 1) {
    bool use_divisors = strategy == RootStrategy::divisors;
    if (strategy == RootStrategy::automatic) use_divisors = divisor_route_is_cheap(g);
    distinct = use_divisors ? roots_by_divisors(g) : roots_by_isolation(g);
  }
  if (zero_mult > 0) distinct.emplace_back(0);
  std::sort(distinct.begin(), distinct.end());
  for (const auto& r : distinct) {
    unsigned mult = 0;
    UniPoly h = f;
    const UniPoly linear({-r, Rational(1)});
    while (h.degree() >= 1 && h.evaluate(r).is_zero()) {
      h = h / linear;
      ++mult;
    }
    out.push_back({r, mult});
  }
  return out;
}

std::vector<Rational> distinct_rational_roots(const UniPoly& f) {
  std::vector<Rational> out;
  for (auto& rm : rational_roots(f)) out.push_back(std::move(rm.root));
  return out;
}

}  // namespace delpezzo
