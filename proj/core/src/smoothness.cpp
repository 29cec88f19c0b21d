#include <algorithm>
#include <sstream>
#include <thread>

#include "delpezzo/errors.hpp"
#include "delpezzo/number_theory.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

namespace {

// Exhaustive scans beyond this are impractical (p^2 points).
constexpr std::uint64_t kMaxScanPrime = 1u << 14;

// gcd that tolerates zero inputs; the gcd of two zero polynomials is zero.
UniPoly gcd0(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  return gcd(f, g);
}

void append_witness(std::vector<SmoothnessWitness>& out, Chart chart, SmoothnessWitness::Kind kind,
                    const UniPoly& factor) {
  if (factor.is_zero() || factor.is_constant()) return;
  SmoothnessWitness w;
  w.chart = chart;
  w.kind = kind;
  w.factor = factor.monic();
  w.rational_roots = distinct_rational_roots(w.factor);
  out.push_back(std::move(w));
}

void chart_criterion(const UniPoly& A, const UniPoly& B, Chart chart, std::vector<SmoothnessWitness>& out) {
  const UniPoly delta = Rational(4) * A.pow(3) + Rational(27) * B.pow(2);
  const UniPoly g = Rational(2) * A * B.derivative() - Rational(3) * A.derivative() * B;
  UniPoly h = gcd0(delta, g);
  // Roots shared with A belong to the second branch of the criterion.
  for (UniPoly common = gcd0(h, A); !common.is_constant(); common = gcd0(h, A)) {
    h = h / common;
  }
  append_witness(out, chart, SmoothnessWitness::Kind::a4_nonzero, h);
  append_witness(out, chart, SmoothnessWitness::Kind::a4_zero, gcd0(gcd0(A, B), B.derivative()));
}

// Arithmetic in F_p for p < 2^32.
struct Fp {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t horner_form(const std::vector<std::uint64_t>& coeffs, std::uint64_t z, std::uint64_t w) const {
    // sum c_i z^i w^(n-i)
    const std::size_t n = coeffs.size() - 1;
    std::uint64_t acc = 0;
    std::uint64_t zp = 1;
    std::vector<std::uint64_t> wp(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) wp[i] = mul(wp[i - 1], w);
    for (std::size_t i = 0; i <= n; ++i) {
      acc = add(acc, mul(coeffs[i], mul(zp, wp[n - i])));
      zp = mul(zp, z);
    }
    return acc;
  }
};

std::vector<std::uint64_t> reduce_form(const BinaryForm& form, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  out.reserve(form.coeffs.size());
  for (const auto& c : form.coeffs) out.push_back(reduce_mod(c, p));
  return out;
}

bool divides(std::uint64_t p, const Integer& n) { return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; }

std::vector<Rational> all_params(const SurfaceParams& s) {
  return {s.a, s.b, s.c, s.d, s.e, s.f[0], s.f[1], s.f[2], s.f[3]};
}

bool divides_param_denominator(const Surface& surface, std::uint64_t p) {
  for (const auto& r : all_params(surface.params())) {
    if (divides(p, r.denominator())) return true;
  }
  return false;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InputError("modp: " + std::to_string(p) + " is not an odd prime");
  }
}

// Reduction is globally degenerate: f loses its cubic term or Delta vanishes.
bool bad_reduction(const Surface& surface, std::uint64_t p) {
  if (reduce_mod(surface.params().f[3], p) == 0) return true;
  const auto delta = reduce_form(surface.discriminant_form().form, p);
  return std::all_of(delta.begin(), delta.end(), [](std::uint64_t c) { return c == 0; });
}

bool poly_is_p_integral(const UniPoly& f, std::uint64_t p) {
  return std::none_of(f.coefficients().begin(), f.coefficients().end(),
                      [p](const Rational& c) { return divides(p, c.denominator()); });
}

// Resultant certificate: no common root of (f, g) over the algebraic closure of F_p.
bool resultant_certifies(const UniPoly& f, const UniPoly& g, std::uint64_t p) {
  if (f.is_zero() || g.is_zero()) return false;
  if (!poly_is_p_integral(f, p) || !poly_is_p_integral(g, p)) return false;
  if (divides(p, f.leading().numerator()) || divides(p, g.leading().numerator())) return false;
  const Rational res = resultant(f, g);
  return !res.is_zero() && !divides(p, res.numerator());
}

// Every singular point of x^3 + A x + B in the chart is a common root of these.
std::array<UniPoly, 3> singular_locus_polys(const UniPoly& A, const UniPoly& B) {
  const UniPoly dA = A.derivative();
  const UniPoly dB = B.derivative();
  return {Rational(4) * A.pow(3) + Rational(27) * B.pow(2), Rational(3) * dB * dB + A * dA * dA,
          B * dA.pow(3) - A * dA * dA * dB - dB.pow(3)};
}

bool chart_certified_smooth(const UniPoly& A, const UniPoly& B, std::uint64_t p) {
  const auto [r1, r2, r3] = singular_locus_polys(A, B);
  if (resultant_certifies(r1, r2, p) || resultant_certifies(r1, r3, p) || resultant_certifies(r2, r3, p)) {
    return true;
  }
  for (long lambda = 1; lambda <= 4; ++lambda) {
    if (resultant_certifies(r1, r2 + Rational(lambda) * r3, p)) return true;
  }
  return false;
}

bool has_root_mod_p(const UniPoly& f, std::uint64_t p) {
  if (p > kMaxScanPrime || !poly_is_p_integral(f, p)) return false;
  std::vector<std::uint64_t> c;
  for (const auto& a : f.coefficients()) c.push_back(reduce_mod(a, p));
  if (c.empty() || c.back() == 0) return false;
  const Fp fp{p};
  for (std::uint64_t t = 0; t < p; ++t) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = fp.add(fp.mul(acc, t), *it);
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

std::string to_string(Chart chart) { return chart == Chart::t ? "t" : "s"; }

bool SmoothnessVerdict::has_rational_witness() const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [](const SmoothnessWitness& w) { return !w.rational_roots.empty(); });
}

bool SmoothnessCrossCheck::has_good_prime() const {
  return std::any_of(primes.begin(), primes.end(), [](const PrimeComparison& c) { return c.good; });
}

SmoothnessVerdict smoothness_check(const Surface& surface) {
  SmoothnessVerdict verdict;
  if (surface.discriminant_form().is_identically_zero()) {
    verdict.status = SmoothnessVerdict::Status::degenerate;
    return verdict;
  }
  chart_criterion(surface.A_affine(), surface.B_affine(), Chart::t, verdict.witnesses);
  chart_criterion(surface.A_form().chart_s(), surface.B_form().chart_s(), Chart::s, verdict.witnesses);
  verdict.status =
      verdict.witnesses.empty() ? SmoothnessVerdict::Status::smooth : SmoothnessVerdict::Status::singular;
  return verdict;
}

ModpVerdict modp_singular_scan(const Surface& surface, std::uint64_t p) {
  require_odd_prime(p);
  if (p > kMaxScanPrime) {
    throw InputError("modp: p = " + std::to_string(p) + " exceeds the exhaustive scan limit");
  }
  if (divides_param_denominator(surface, p)) {
    throw InputError("modp: p = " + std::to_string(p) + " divides a parameter denominator");
  }
  ModpVerdict verdict;
  verdict.p = p;
  if (bad_reduction(surface, p)) {
    verdict.status = ModpVerdict::Status::bad_prime;
    return verdict;
  }

  const Fp fp{p};
  const auto A = reduce_form(surface.A_form(), p);
  const auto B = reduce_form(surface.B_form(), p);
  const auto Az = reduce_form(surface.A_form().partial_z(), p);
  const auto Aw = reduce_form(surface.A_form().partial_w(), p);
  const auto Bz = reduce_form(surface.B_form().partial_z(), p);
  const auto Bw = reduce_form(surface.B_form().partial_w(), p);

  // Scans every x over the point (z, w) of P^1; returns the first singular x.
  auto scan_fiber = [&](std::uint64_t z, std::uint64_t w) -> std::optional<std::uint64_t> {
    const std::uint64_t a = fp.horner_form(A, z, w);
    const std::uint64_t b = fp.horner_form(B, z, w);
    const std::uint64_t az = fp.horner_form(Az, z, w);
    const std::uint64_t aw = fp.horner_form(Aw, z, w);
    const std::uint64_t bz = fp.horner_form(Bz, z, w);
    const std::uint64_t bw = fp.horner_form(Bw, z, w);
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t x2 = fp.mul(x, x);
      if (fp.add(fp.add(fp.mul(x2, x), fp.mul(a, x)), b) != 0) continue;
      if (fp.add(fp.mul(3, x2), a) != 0) continue;
      if (fp.add(fp.mul(az, x), bz) != 0) continue;
      if (fp.add(fp.mul(aw, x), bw) != 0) continue;
      return x;
    }
    return std::nullopt;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = p < 512 ? 1u : std::min(hw, 8u);
  std::vector<std::optional<std::array<std::uint64_t, 3>>> found(workers);
  auto work = [&](unsigned k) {
    const std::uint64_t lo = p * k / workers;
    const std::uint64_t hi = p * (k + 1) / workers;
    for (std::uint64_t t = lo; t < hi; ++t) {
      if (auto x = scan_fiber(t, 1)) {
        found[k] = std::array<std::uint64_t, 3>{*x, t, 1};
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work, k);
  }
  verdict.points_scanned = static_cast<std::size_t>(p * p + p);
  for (const auto& f : found) {
    if (f) {
      verdict.singular_point = f;
      break;
    }
  }
  if (!verdict.singular_point) {
    if (auto x = scan_fiber(1, 0)) verdict.singular_point = std::array<std::uint64_t, 3>{*x, 1, 0};
  }
  verdict.status = verdict.singular_point ? ModpVerdict::Status::singular : ModpVerdict::Status::smooth;
  return verdict;
}

bool is_good_prime(const Surface& surface, const SmoothnessVerdict& verdict, std::uint64_t p) {
  if (p < 5 || p % 2 == 0 || !is_prime(p)) return false;
  if (divides_param_denominator(surface, p) || bad_reduction(surface, p)) return false;
  switch (verdict.status) {
    case SmoothnessVerdict::Status::degenerate:
      return false;
    case SmoothnessVerdict::Status::smooth:
      return chart_certified_smooth(surface.A_affine(), surface.B_affine(), p) &&
             chart_certified_smooth(surface.A_form().chart_s(), surface.B_form().chart_s(), p);
    case SmoothnessVerdict::Status::singular:
      if (verdict.has_rational_witness()) return true;
      return std::any_of(verdict.witnesses.begin(), verdict.witnesses.end(),
                         [p](const SmoothnessWitness& w) { return has_root_mod_p(w.factor, p); });
  }
  return false;
}

SmoothnessCrossCheck cross_validate_smoothness(const Surface& surface, std::span<const std::uint64_t> primes) {
  SmoothnessCrossCheck check;
  check.symbolic = smoothness_check(surface);
  for (const std::uint64_t p : primes) {
    require_odd_prime(p);
    PrimeComparison cmp;
    cmp.p = p;
    if (divides_param_denominator(surface, p)) {
      cmp.note = "p divides a parameter denominator";
      check.primes.push_back(std::move(cmp));
      continue;
    }
    cmp.scan = modp_singular_scan(surface, p);
    cmp.good = is_good_prime(surface, check.symbolic, p);
    const auto scanned = cmp.scan->status;
    switch (check.symbolic.status) {
      case SmoothnessVerdict::Status::smooth:
        cmp.agrees = scanned == ModpVerdict::Status::smooth;
        break;
      case SmoothnessVerdict::Status::singular:
        cmp.agrees = scanned == ModpVerdict::Status::singular;
        break;
      case SmoothnessVerdict::Status::degenerate:
        cmp.agrees = scanned == ModpVerdict::Status::bad_prime;
        break;
    }
    if (cmp.good) {
      cmp.note = "good reduction";
    } else if (scanned == ModpVerdict::Status::bad_prime) {
      cmp.note = "bad reduction";
    } else {
      cmp.note = "reduction not certified";
    }
    if (cmp.good && !cmp.agrees) {
      std::ostringstream msg;
      msg << "smoothness cross-check failed at p = " << p << ": symbolic verdict "
          << (check.symbolic.is_smooth() ? "smooth" : "singular") << ", scan "
          << (scanned == ModpVerdict::Status::smooth ? "smooth" : "singular");
      if (cmp.scan->singular_point) {
        const auto& pt = *cmp.scan->singular_point;
        msg << " at (x, z, w) = (" << pt[0] << ", " << pt[1] << ", " << pt[2] << ")";
      }
      throw IdentityFailure(msg.str());
    }
    check.primes.push_back(std::move(cmp));
  }
  return check;
}

}  // namespace delpezzo
