#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cq/integers.hpp"

namespace cq {

struct PrimePower {
    Int prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Prime-exponent decomposition of a nonzero integer.
/// sign * prod(prime^exponent) == value, primes strictly increasing.
struct Factorization {
    Int value;
    int sign = 1;
    std::vector<PrimePower> factors;

    Int reconstruct() const;
};

/// Factor n != 0. Deterministic: trial division below 10^6, then
/// Brent's rho with a fixed constant sequence. Sized for |n| up to ~10^20;
/// larger inputs work but may be slow when all prime factors exceed ~10^9.
Factorization factorize(const Int& n);

/// Deterministic Miller-Rabin (exact for n < 3.3e24).
bool is_prime(const Int& n);

/// True iff no squared prime divides |n|. n != 0.
bool is_squarefree(const Int& n);

/// Squarefree d with n = d * s^2; sign of n preserved. n != 0.
Int squarefree_kernel(const Int& n);

/// Nonnegative integer root when n is a perfect square; nullopt otherwise.
std::optional<Int> is_perfect_square(const Int& n);

/// A square root of n modulo p^k when one exists (p prime). Handles p = 2.
std::optional<Int> sqrt_mod_prime_power(const Int& n, const Int& p, unsigned k);

/// Does y^2 = n (mod modulus) have a solution? modulus >= 2.
/// Factors the modulus, solves each prime power, combines via CRT.
bool is_qr_mod(const Int& n, const Int& modulus);

/// All positive divisors, sorted ascending.
std::vector<Int> divisors(const Factorization& f);

}  // namespace cq
