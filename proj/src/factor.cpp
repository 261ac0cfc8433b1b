#include "cq/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cq {

namespace {

constexpr uint32_t kTrialBound = 1'000'000;

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < kTrialBound; j += i)
                composite[size_t(j)] = true;
        }
        return out;
    }();
    return primes;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

// Brent's cycle variant with batched gcd; c increments deterministically.
Int brent_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd_int(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack to the first failing iterate
            do {
                ys = (ys * ys + c) % n;
                d = gcd_int(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, unsigned mult) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        factor_rec(isqrt(n), out, 2 * mult);
        return;
    }
    Int d = brent_rho(n);
    factor_rec(d, out, mult);
    factor_rec(n / d, out, mult);
}

// Tonelli-Shanks; p odd prime, a a quadratic residue unit mod p.
Int sqrt_mod_odd_prime(const Int& a, const Int& p) {
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned s = 0;
    while (is_even(q)) {
        q /= 2;
        ++s;
    }
    Int nonres = 2;
    while (powmod(nonres, (p - 1) / 2, p) != p - 1) ++nonres;
    Int m = s, cc = powmod(nonres, q, p);
    Int t = powmod(a, q, p);
    Int r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = cc;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        cc = b * b % p;
        t = t * cc % p;
        r = r * b % p;
    }
    return r;
}

// Hensel lift of x0^2 = a (mod p) to mod p^k, p odd, a a unit.
Int lift_odd(const Int& a, const Int& p, unsigned k, Int x) {
    Int pj = p;
    unsigned j = 1;
    Int pk = pow_int(p, k);
    while (j < k) {
        unsigned jn = std::min(2 * j, k);
        Int pjn = pow_int(p, jn);
        Int inv;
        Int two_x = 2 * x;
        if (mpz_invert(inv.get_mpz_t(), two_x.get_mpz_t(), pjn.get_mpz_t()) == 0)
            throw std::logic_error("lift_odd: non-invertible derivative");
        x = mod_floor(x - (x * x - a) * inv, pjn);
        j = jn;
        pj = pjn;
    }
    return mod_floor(x, pk);
}

// sqrt of odd unit u mod 2^k, requires u = 1 (mod 8) when k >= 3.
std::optional<Int> sqrt_mod_power_of_two_unit(const Int& u, unsigned k) {
    if (k == 1) return Int(1);
    if (k == 2) return (mod_floor(u, 4) == 1) ? std::optional<Int>(Int(1)) : std::nullopt;
    if (mod_floor(u, 8) != 1) return std::nullopt;
    Int x = 1;
    for (unsigned j = 3; j < k; ++j) {
        Int pj1 = pow_int(Int(2), j + 1);
        if (mod_floor(x * x - u, pj1) != 0) x += pow_int(Int(2), j - 1);
    }
    return mod_floor(x, pow_int(Int(2), k));
}

}  // namespace

Int Factorization::reconstruct() const {
    Int r = sign;
    for (const auto& [p, e] : factors) r *= pow_int(p, e);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned wit[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned w : wit) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (is_even(d)) {
        d /= 2;
        ++r;
    }
    for (unsigned w : wit)
        if (miller_rabin_witness(n, Int(w), d, r)) return false;
    return true;
}

Factorization factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    Factorization f;
    f.value = n;
    f.sign = n < 0 ? -1 : 1;
    Int rest = abs(n);
    std::map<Int, unsigned> acc;
    for (uint32_t p : small_primes()) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            acc[Int(p)] += 1;
        }
    }
    factor_rec(rest, acc, 1);
    for (const auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

bool is_squarefree(const Int& n) {
    if (n == 0) throw std::invalid_argument("is_squarefree: zero input");
    Factorization f = factorize(abs(n));
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent <= 1; });
}

Int squarefree_kernel(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: zero input");
    Factorization f = factorize(n);
    Int k = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2) k *= p;
    return k;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt(n);
}

std::optional<Int> sqrt_mod_prime_power(const Int& n, const Int& p, unsigned k) {
    Int pk = pow_int(p, k);
    Int r = mod_floor(n, pk);
    if (r == 0) return Int(0);
    unsigned e = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        r /= p;
        ++e;
    }
    if (e % 2) return std::nullopt;
    unsigned kk = k - e;
    std::optional<Int> root;
    if (p == 2) {
        root = sqrt_mod_power_of_two_unit(r, kk);
    } else {
        if (powmod(r, (p - 1) / 2, p) != 1) return std::nullopt;
        root = lift_odd(r, p, kk, sqrt_mod_odd_prime(mod_floor(r, p), p));
    }
    if (!root) return std::nullopt;
    return mod_floor(*root * pow_int(p, e / 2), pk);
}

bool is_qr_mod(const Int& n, const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("is_qr_mod: modulus must be >= 2");
    Factorization f = factorize(modulus);
    // Build a witness via CRT; existence per prime power is what we check.
    Int x = 0, mod_so_far = 1;
    for (const auto& [p, e] : f.factors) {
        auto root = sqrt_mod_prime_power(n, p, e);
        if (!root) return false;
        Int pe = pow_int(p, e);
        Int inv, diff = mod_floor(*root - x, pe);
        if (mpz_invert(inv.get_mpz_t(), mod_so_far.get_mpz_t(), pe.get_mpz_t()) == 0)
            throw std::logic_error("is_qr_mod: CRT moduli not coprime");
        x += mod_so_far * mod_floor(diff * inv, pe);
        mod_so_far *= pe;
    }
    return mod_floor(x * x - n, modulus) == 0;
}

std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : f.factors) {
        size_t n = out.size();
        Int pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < n; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cq
