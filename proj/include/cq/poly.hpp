#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cq/integers.hpp"

namespace cq {

/// Dense univariate polynomial with exact rational coefficients,
/// constant term first. Leading coefficient nonzero unless zero polynomial.
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rat> coeffs);

    /// Parse the CLI interchange format: comma-separated rationals,
    /// constant term first, e.g. "-1069,-747,-149,-3,1".
    static ExactPoly from_string(std::string_view s);
    std::string to_string() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of X^i (zero beyond the degree).
    Rat coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const ExactPoly&) const = default;

private:
    std::vector<Rat> coeffs_;
};

/// Monic integer quartic X^4 + a3 X^3 + a2 X^2 + a1 X + a0.
struct IntQuartic {
    Int a3, a2, a1, a0;

    ExactPoly poly() const;
    /// Conversion from a monic integral quartic ExactPoly; throws otherwise.
    static IntQuartic from_poly(const ExactPoly& p);

    bool operator==(const IntQuartic&) const = default;
};

Rat evaluate(const ExactPoly& p, const Rat& x);

/// q with q(X) = p(X + r).
ExactPoly shift(const ExactPoly& p, const Rat& r);

bool is_integral(const ExactPoly& p);

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), exact. deg p >= 1.
Rat discriminant(const ExactPoly& p);

/// Complete sorted set of rational roots. Clears denominators and
/// enumerates divisors of the extreme coefficients (factorization-backed).
std::vector<Rat> rational_roots(const ExactPoly& p);

/// Exact irreducibility over Q for monic integer quartics: no rational
/// root and no split into two monic integer quadratics.
bool quartic_irreducible(const IntQuartic& p);

}  // namespace cq
