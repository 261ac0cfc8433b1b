#include "cq/conductor.hpp"

#include <algorithm>
#include <set>

#include "cq/factor.hpp"

namespace cq {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// First prime whose square divides n, for error reporting.
Int square_factor(const Int& n) {
    for (const auto& [p, e] : factorize(abs(n)).factors)
        if (e >= 2) return p;
    throw std::logic_error("square_factor: input is squarefree");
}

void check_squarefree(const Int& n, const char* what) {
    if (!is_squarefree(n)) {
        Int p = square_factor(n);
        throw squarefree_error(std::string(what) + " = " + to_string(n) +
                                   " is divisible by " + to_string(p) + "^2",
                               p);
    }
}

// Cornacchia: p = 2 or p = 1 (mod 4) prime -> one (b, c) with b^2 + c^2 = p.
std::pair<Int, Int> two_squares_prime(const Int& p) {
    if (p == 2) return {1, 1};
    auto r0 = sqrt_mod_prime_power(p - 1, p, 1);  // sqrt(-1) mod p
    if (!r0) throw std::domain_error("two_squares_prime: p != 1 (mod 4)");
    Int a = p, b = *r0;
    if (b > p - b) b = p - b;
    while (b * b > p) {
        Int t = a % b;
        a = b;
        b = t;
    }
    Int c2 = p - b * b;
    auto c = is_perfect_square(c2);
    if (!c) throw std::logic_error("two_squares_prime: descent failed");
    return {b, *c};
}

struct Gaussian {
    Int re, im;
};

Gaussian mul(const Gaussian& u, const Gaussian& v) {
    return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
}

// Is e/A a square of a rational? (A = kernel(e) by construction; checks sign.)
bool kernel_quotient_square(const Int& e, const Int& A) {
    if (A == 0 || e % A != 0) return false;
    return is_perfect_square(e / A).has_value();
}

}  // namespace

Int sw_conductor(const CanonicalCyclicQuartic& c) {
    require(c.A != 0 && is_odd(c.A), "sw_conductor: A must be odd and nonzero");
    require(c.B > 0 && c.C > 0, "sw_conductor: B and C must be positive");
    require(c.D == c.B * c.B + c.C * c.C, "sw_conductor: D != B^2 + C^2");
    require(is_squarefree(c.A), "sw_conductor: A not squarefree");
    require(is_squarefree(c.D), "sw_conductor: D not squarefree");
    require(gcd_int(abs(c.A), c.D) == 1, "sw_conductor: gcd(A, D) != 1");
    Int dmod = mod_floor(c.D, 4);
    unsigned long ell;
    if (dmod == 2 || (dmod == 1 && is_odd(c.B))) {
        ell = 3;
    } else if (dmod == 1 && is_even(c.B)) {
        ell = mod_floor(c.A + c.B, 4) == 3 ? 2 : 0;
    } else {
        throw std::invalid_argument("sw_conductor: D = 3 (mod 4) is impossible");
    }
    return pow_int(Int(2), ell) * abs(c.A) * c.D;
}

CanonicalCyclicQuartic family_canonical(const Int& z) {
    require(abs(z) >= 2, "family_canonical: |z| >= 2 required");
    Int a = z * z - 2;
    Int m = a * a + 4;
    if (is_even(z)) {
        check_squarefree(a, "A-part z^2-2");
        check_squarefree(m / 4, "D-part (z^4-4z^2+8)/4");
        return {a / 2, a / 2, Int(1), m / 4};
    }
    check_squarefree(a, "A-part z^2-2");
    check_squarefree(m, "D-part z^4-4z^2+8");
    return {a, Int(2), a, m};
}

Int quadratic_conductor(const Int& z) {
    require(abs(z) >= 2, "quadratic_conductor: |z| >= 2 required");
    Int m = pow_int(z, 4) - 4 * z * z + 8;
    if (is_even(z)) {
        check_squarefree(m / 4, "(z^4-4z^2+8)/4");
        require(mod_floor(m / 4, 4) == 2, "quadratic_conductor: m/4 != 2 (mod 4)");
    } else {
        check_squarefree(m, "z^4-4z^2+8");
        require(mod_floor(m, 4) == 1, "quadratic_conductor: m != 1 (mod 4)");
    }
    return m;
}

Int field_discriminant(const Int& m, const Int& g) {
    require(m >= 1 && g >= 1, "field_discriminant: m, g >= 1 required");
    return m * m * m * g * g;
}

std::vector<std::pair<Int, Int>> sum_of_two_squares(const Int& d) {
    auto fac = factorize(d);
    std::vector<Gaussian> reps{{1, 0}};
    for (const auto& [p, e] : fac.factors) {
        if (e != 1) throw std::invalid_argument("sum_of_two_squares: d not squarefree");
        if (p != 2 && mod_floor(p, 4) == 3)
            throw std::domain_error("sum_of_two_squares: prime 3 (mod 4) divides d");
        auto [bp, cp] = two_squares_prime(p);
        Gaussian w{bp, cp}, wbar{bp, -cp};
        std::vector<Gaussian> next;
        for (const auto& r : reps) {
            next.push_back(mul(r, w));
            if (p != 2) next.push_back(mul(r, wbar));
        }
        reps = std::move(next);
    }
    std::set<std::pair<Int, Int>> out;
    for (const auto& r : reps) {
        Int b = abs(r.re), c = abs(r.im);
        if (b > 0 && c > 0) {
            out.insert({b, c});
            out.insert({c, b});
        }
    }
    return {out.begin(), out.end()};
}

CanonicalCyclicQuartic canonicalize_params(const Int& a, const Int& g, const Int& m) {
    require(a >= 1 && g >= 1 && m >= 2, "canonicalize_params: need a, g >= 1, m >= 2");
    Int d = squarefree_kernel(m);
    require(d > 1, "canonicalize_params: m is a perfect square; field is not quartic");
    Int s = isqrt(m / d);
    Int P = 2 * g * m;
    Int Q = 2 * g * a * s;
    Int Pd = P / d;  // = 2 g s^2
    std::vector<CanonicalCyclicQuartic> found;
    auto consider = [&](const Int& A, const Int& B, const Int& C) {
        if (A == 0 || is_even(A) || gcd_int(abs(A), d) != 1) return;
        CanonicalCyclicQuartic c{A, B, C, d};
        if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
    };
    for (const auto& [B, C] : sum_of_two_squares(d)) {
        Int e0 = P - Q * B;
        Int f0 = Q - Pd * B;
        if (f0 == 0) {
            if (e0 == 0) continue;
            Int A1 = squarefree_kernel(e0);
            if (kernel_quotient_square(e0, A1)) consider(A1, B, C);
            Int A2 = squarefree_kernel(e0 * d);
            // e0/(A2 d) = q^2 requires e0*d/A2 to be a square times d^2
            if (A2 != 0 && (e0 * d) % A2 == 0 && is_perfect_square((e0 * d) / A2))
                consider(A2, B, C);
            continue;
        }
        Int N0 = e0 * e0 - f0 * f0 * d;
        auto n = is_perfect_square(N0);
        if (!n) continue;
        for (int sign : {1, -1}) {
            // T = (e0 + sign*n)/2, possibly a half-integer: work with 2T.
            Int twoT = e0 + sign * *n;
            if (twoT == 0) continue;
            // delta = (e0 + f0 sqrt(d))/A with A = kernel(T); p^2 = T/A.
            Int A = squarefree_kernel(2 * twoT);  // kernel of T as a rational
            if (is_even(A) || gcd_int(abs(A), d) != 1) continue;
            // p^2 = T/A = twoT/(2A); verify exactly over rationals.
            Rat T = Rat(twoT) / 2;
            Rat p2 = T / Rat(A);
            if (p2 <= 0) continue;
            Rat p2n(p2);
            p2n.canonicalize();
            auto pn = is_perfect_square(p2n.get_num());
            auto pd = is_perfect_square(p2n.get_den());
            if (!pn || !pd) continue;
            Rat p(*pn, *pd);
            p.canonicalize();
            if (p == 0) continue;
            Rat q = Rat(f0) / (Rat(2 * A) * p);
            Rat lhs = p * p + q * q * Rat(d);
            Rat rhs = Rat(e0) / Rat(A);
            if (lhs == rhs) consider(A, B, C);
        }
    }
    if (found.empty())
        throw std::domain_error("canonicalize_params: no canonical form found (field not cyclic?)");
    if (found.size() > 1)
        throw std::logic_error("canonicalize_params: canonical form is not unique");
    return found.front();
}

Int quad_field_conductor(const Int& D) {
    require(D > 1 && is_squarefree(D), "quad_field_conductor: D must be squarefree > 1");
    return mod_floor(D, 4) == 1 ? D : 4 * D;
}

Int true_field_discriminant(const CanonicalCyclicQuartic& c) {
    Int f = sw_conductor(c);
    return quad_field_conductor(c.D) * f * f;
}

}  // namespace cq
