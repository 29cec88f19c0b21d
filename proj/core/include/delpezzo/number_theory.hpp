#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

/// Prime factorization of |n| (n != 0) by trial division followed by
/// Pollard-Brent. Throws Error if a cofactor resists `rho_iterations`.
std::vector<PrimePower> factorize(const Integer& n, std::uint64_t rho_iterations = 2'000'000);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

bool is_probable_prime(const Integer& n);

/// Exact (small) primality for the mod-p oracles.
bool is_prime(std::uint64_t n);

/// Reduces a rational modulo p. Throws InputError when p divides the denominator.
std::uint64_t reduce_mod(const Rational& r, std::uint64_t p);

}  // namespace delpezzo
