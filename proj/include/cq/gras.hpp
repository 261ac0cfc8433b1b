#pragma once

#include <optional>

#include "cq/poly.hpp"

namespace cq {

/// One parameter tuple (a,b,g,m,x,y,z,t,chi) of the cyclic quartic
/// construction. Validated: m = a^2 + b^2 with b even, chi = +-1.
struct GrasParams {
    Int a, b, g, m, x, y, z;
    std::optional<Int> t;
    int chi = 1;

    GrasParams(Int a, Int b, Int g, Int m, Int x, Int y, Int z, int chi = 1,
               std::optional<Int> t = std::nullopt);

    Int conductor() const { return m * g; }
    const Int& t_value() const;
};

/// The base family: a = z^2 - 2, b = 2, g = a, m = z^4 - 4z^2 + 8,
/// x = 1, y = 0 (t left unset). Requires |z| >= 2.
GrasParams family_params(const Int& z);

/// t = z + 2 when z = 2 (mod 4), else t = z.
Int choose_t(const Int& z);

/// The quartic P(X) = X^4 - S1 X^3 + S2 X^2 - S3 X + S4 with theta as a
/// root; coefficients exact rationals, not necessarily integral.
ExactPoly gras_polynomial(const GrasParams& p);

/// The explicit family polynomial f_z.
ExactPoly fz_polynomial(const Int& z);

/// f_z when z != 2 (mod 4); f_z(X - 1/2) when z = 2 (mod 4). Integral.
ExactPoly fz_presented(const Int& z);

/// f_psi = X^4 - (z^2-2)(z^4-4z^2+8) X^2 + (z^2-2)^2 (z^4-4z^2+8), |z| >= 2.
IntQuartic psi_polynomial(const Int& z);

/// Integrality congruences for theta (branch on parity of m).
bool hasse_integral(const GrasParams& p);

/// Both equations of the defining Diophantine system, either sign.
bool verify_system(const GrasParams& p);

struct ThetaNumeric {
    mpf_class theta;
    mpf_class residual;  // |P(theta)|
};

/// Floating approximation of theta = (t + z sqrt(m) + 2x psi - 2y psi3)/4
/// at the given decimal precision. Requires a real psi (chi = +1, g > 0).
ThetaNumeric theta_numeric(const GrasParams& p, unsigned digits);

/// a = z^2 + 2 variant of the base family; t from choose_t.
GrasParams further_family_a(const Int& z);

/// a = 1, x = y = 1, z = 4v + 2, t = z, g = 8v^2 + 8v + 4, b = g/2.
GrasParams further_family_b(const Int& v);

/// The four (x,y) = (3,4) families; which selects
/// 1: z = 3125v + 1020, 2: z = 3125v - 1020 (both with g = z^2/25 - 2),
/// 3: z = 3125v + 1265, 4: z = 3125v - 1265 (both with g = z^2/25 + 2).
/// t is the smallest |t| making P integral and irreducible (Hasse-passing
/// t preferred when one exists).
GrasParams x3y4_family(int which, const Int& v);

/// Smallest |t| (positive before negative) making gras_polynomial integral
/// and irreducible; when require_hasse, the Hasse congruences must hold too.
std::optional<Int> scan_t(const GrasParams& p, bool require_hasse);

}  // namespace cq
