#include "delpezzo/number_theory.hpp"

#include <algorithm>
#include <map>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

constexpr unsigned long kTrialLimit = 1U << 16U;

Integer pollard_brent(const Integer& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t()) != 0) return Integer(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Integer y = rng.get_z_range(n);
    const Integer c = rng.get_z_range(n - 1) + 1;
    const unsigned long m = 128;
    Integer g = 1;
    Integer q = 1;
    Integer x;
    Integer ys;
    unsigned long r = 1;
    std::uint64_t spent = 0;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
        spent += steps;
      }
      r *= 2;
      if (spent > budget) break;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    if (spent > budget) break;
  }
  throw Error("factorization budget exhausted for a " + std::to_string(bit_length(n)) +
              "-bit cofactor");
}

void split(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  for (unsigned long k = 2; k <= bit_length(n); ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Integer, unsigned> sub;
      split(root, sub, budget);
      for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
      return;
    }
  }
  const Integer d = pollard_brent(n, budget);
  split(d, out, budget);
  split(Integer(n / d), out, budget);
}

}  // namespace

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(const Integer& n, std::uint64_t rho_iterations) {
  if (n == 0) throw InputError("cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  if (m != 1) {
    if (m < Integer(kTrialLimit) * Integer(kTrialLimit)) {
      ++found[m];
    } else {
      split(m, found, rho_iterations);
    }
  }
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divisors.size();
    Integer power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.emplace_back(divisors[j] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::uint64_t reduce_mod(const Rational& r, std::uint64_t p) {
  const Integer modulus(static_cast<unsigned long>(p));
  Integer den = r.denominator() % modulus;
  if (den == 0) {
    throw InputError("prime " + std::to_string(p) + " divides denominator of " + r.to_string());
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer v = r.numerator() * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return v.get_ui();
}

}  // namespace delpezzo
