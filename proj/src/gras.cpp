#include "cq/gras.hpp"

#include <stdexcept>

namespace cq {

namespace {

Rat rat_div(const Int& num, long den) { return Rat(num) / Rat(den); }

}  // namespace

GrasParams::GrasParams(Int a_, Int b_, Int g_, Int m_, Int x_, Int y_, Int z_, int chi_,
                       std::optional<Int> t_)
    : a(std::move(a_)), b(std::move(b_)), g(std::move(g_)), m(std::move(m_)), x(std::move(x_)),
      y(std::move(y_)), z(std::move(z_)), t(std::move(t_)), chi(chi_) {
    if (m != a * a + b * b) throw std::invalid_argument("GrasParams: m != a^2 + b^2");
    if (!is_even(b)) throw std::invalid_argument("GrasParams: b must be even");
    if (chi != 1 && chi != -1) throw std::invalid_argument("GrasParams: chi must be +-1");
}

const Int& GrasParams::t_value() const {
    if (!t) throw std::logic_error("GrasParams: t is not set");
    return *t;
}

GrasParams family_params(const Int& z) {
    if (abs(z) < 2)
        throw std::invalid_argument("family_params: |z| >= 2 required");
    Int a = z * z - 2;
    return GrasParams(a, 2, a, a * a + 4, 1, 0, z);
}

Int choose_t(const Int& z) { return mod_floor(z, 4) == 2 ? Int(z + 2) : z; }

ExactPoly gras_polynomial(const GrasParams& p) {
    const Int& t = p.t_value();
    Int f = p.m * p.g;
    Int c = p.x * p.x + p.y * p.y;
    Int U = t * t + p.m * p.z * p.z - 2 * c * f;
    Int V = t * p.z - p.g * (p.a * (p.x * p.x - p.y * p.y) - 2 * p.b * p.x * p.y);
    Rat S1(t);
    Rat S2 = rat_div(U + 2 * (t * t - p.m * p.z * p.z), 8);
    Rat S3 = rat_div(U * t - 2 * p.m * p.z * V, 16);
    Rat S4 = rat_div(U * U - 4 * p.m * V * V, 256);
    return ExactPoly({S4, -S3, S2, -S1, Rat(1)});
}

ExactPoly fz_polynomial(const Int& z) {
    Int z2 = z * z;
    Int z3 = z2 * z;
    Rat c2 = rat_div(3 * z2 * z2 * z2 - 16 * z2 * z2 + 37 * z2 - 32, 8);
    Rat c1 = rat_div(2 * z3 * z3 * z3 - 19 * z3 * z2 * z2 + 72 * z3 * z2 - 135 * z3 + 96 * z, 16);
    Int z4 = z2 * z2;
    Rat c0 = rat_div(3 * z4 * z4 * z4 - 40 * z4 * z4 * z2 + 214 * z4 * z4 - 576 * z4 * z2 +
                         719 * z4 - 64 * z2 - 512,
                     256);
    return ExactPoly({-c0, -c1, -c2, Rat(-z), Rat(1)});
}

ExactPoly fz_presented(const Int& z) {
    ExactPoly f = fz_polynomial(z);
    if (mod_floor(z, 4) == 2) f = shift(f, Rat(-1, 2));
    return f;
}

IntQuartic psi_polynomial(const Int& z) {
    if (abs(z) < 2)
        throw std::invalid_argument("psi_polynomial: |z| >= 2 required");
    Int a = z * z - 2;
    Int m = a * a + 4;
    return IntQuartic{Int(0), Int(-a * m), Int(0), Int(a * a * m)};
}

bool hasse_integral(const GrasParams& p) {
    const Int& t = p.t_value();
    if (is_odd(p.m)) {
        if (!is_even(t - p.z)) return false;
        Int u = (t + p.z) / 2, v = (t - p.z) / 2;
        return is_even(u - p.g * p.x) && is_even(v - p.g * p.y);
    }
    return mod_floor(t, 4) == 0 && is_even(p.z);
}

bool verify_system(const GrasParams& p) {
    Int e1 = p.b * (p.x * p.x - p.y * p.y) + 2 * p.a * p.x * p.y;
    if (e1 != 2 && e1 != -2) return false;
    Int inner = p.z * p.z - p.chi * p.g * (p.x * p.x + p.y * p.y);
    Int e2 = p.m * inner * inner - 4 * p.g * p.g;
    return e2 == 16 || e2 == -16;
}

ThetaNumeric theta_numeric(const GrasParams& p, unsigned digits) {
    if (p.chi != 1 || p.g <= 0)
        throw std::domain_error("theta_numeric: psi is not real (requires chi = +1, g > 0)");
    const Int& t = p.t_value();
    ExactPoly P = gras_polynomial(p);
    // working precision covers the requested digits plus the coefficient
    // magnitude, so the residual bound holds for any parameter size
    size_t coeff_bits = 0;
    for (const Rat& c : P.coeffs())
        coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
    const unsigned long prec =
        static_cast<unsigned long>(digits * 3.3219281) + coeff_bits + 64;
    mpf_class m(p.m, prec);
    mpf_class sm(0, prec);
    sm = sqrt(m);
    mpf_class g(p.g, prec), a(p.a, prec);
    mpf_class psi(0, prec), psi3(0, prec);
    psi = sqrt(g * sm * (a + sm) / 2);
    psi3 = sqrt(g * sm * (sm - a) / 2);
    mpf_class theta(0, prec);
    theta = (mpf_class(t, prec) + mpf_class(p.z, prec) * sm + 2 * mpf_class(p.x, prec) * psi -
             2 * mpf_class(p.y, prec) * psi3) /
            4;
    mpf_class acc(0, prec);
    for (int i = P.degree(); i >= 0; --i) acc = acc * theta + mpf_class(P.coeff(size_t(i)), prec);
    ThetaNumeric out{theta, abs(acc)};
    return out;
}

GrasParams further_family_a(const Int& z) {
    Int a = z * z + 2;
    return GrasParams(a, 2, a, a * a + 4, 1, 0, z, 1, choose_t(z));
}

GrasParams further_family_b(const Int& v) {
    Int g = 8 * v * v + 8 * v + 4;
    Int b = g / 2;
    return GrasParams(1, b, g, b * b + 1, 1, 1, 4 * v + 2, 1, Int(4 * v + 2));
}

std::optional<Int> scan_t(const GrasParams& p, bool require_hasse) {
    Int limit = 2 * abs(p.z) + 4;
    for (Int k = 0; k <= limit; ++k) {
        for (int sign : {1, -1}) {
            if (k == 0 && sign < 0) continue;
            GrasParams q = p;
            q.t = sign * k;
            if (require_hasse && !hasse_integral(q)) continue;
            ExactPoly P = gras_polynomial(q);
            if (!is_integral(P)) continue;
            if (!quartic_irreducible(IntQuartic::from_poly(P))) continue;
            return q.t;
        }
    }
    return std::nullopt;
}

GrasParams x3y4_family(int which, const Int& v) {
    if (which < 1 || which > 4)
        throw std::invalid_argument("x3y4_family: which must be 1..4");
    Int z;
    bool plus_family = which >= 3;
    switch (which) {
        case 1: z = 3125 * v + 1020; break;
        case 2: z = 3125 * v - 1020; break;
        case 3: z = 3125 * v + 1265; break;
        default: z = 3125 * v - 1265; break;
    }
    Int z2 = z * z;
    Int na = plus_family ? Int(7 * z2 + 1550) : Int(7 * z2 - 1550);
    Int nb = plus_family ? Int(24 * z2 + 850) : Int(24 * z2 - 850);
    Int ng = plus_family ? Int(z2 + 50) : Int(z2 - 50);
    if (na % 15625 != 0 || nb % 15625 != 0 || ng % 25 != 0)
        throw std::invalid_argument("x3y4_family: parameters are not integral for this v");
    Int a = na / 15625, b = nb / 15625, g = ng / 25;
    GrasParams p(a, b, g, a * a + b * b, 3, 4, z, 1);
    if (!verify_system(p)) throw std::logic_error("x3y4_family: system check failed");
    auto t = scan_t(p, true);
    if (!t) t = scan_t(p, false);
    if (!t) throw std::logic_error("x3y4_family: no integral irreducible t in range");
    p.t = *t;
    return p;
}

}  // namespace cq
