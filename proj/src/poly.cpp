#include "cq/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "cq/factor.hpp"

namespace cq {

namespace {

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    Rat q;
    if (slash == std::string_view::npos) {
        q = Rat(Int(std::string(s)));
    } else {
        q = Rat(Int(std::string(s.substr(0, slash))), Int(std::string(s.substr(slash + 1))));
    }
    q.canonicalize();
    return q;
}

ExactPoly derivative(const ExactPoly& p) {
    std::vector<Rat> d;
    for (int i = 1; i <= p.degree(); ++i) d.push_back(Rat(i) * p.coeff(size_t(i)));
    return ExactPoly(std::move(d));
}

// Fraction-free determinant (Bareiss) with row pivoting; destroys m.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Resultant of integer polynomials via the Sylvester determinant.
Int resultant_int(const std::vector<Int>& f, const std::vector<Int>& g) {
    const size_t df = f.size() - 1, dg = g.size() - 1;
    const size_t n = df + dg;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (size_t r = 0; r < dg; ++r)
        for (size_t j = 0; j <= df; ++j) m[r][r + j] = f[df - j];
    for (size_t r = 0; r < df; ++r)
        for (size_t j = 0; j <= dg; ++j) m[dg + r][r + j] = g[dg - j];
    return bareiss_det(m);
}

struct IntPolyForm {
    std::vector<Int> coeffs;  // constant first, content-free not required
    Int denom_scale;          // original = coeffs / denom_scale
};

IntPolyForm clear_denominators(const ExactPoly& p) {
    Int lcm = 1;
    for (const Rat& c : p.coeffs()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = l;
    }
    IntPolyForm out;
    out.denom_scale = lcm;
    for (const Rat& c : p.coeffs()) out.coeffs.push_back(Int(c.get_num() * (lcm / c.get_den())));
    return out;
}

// ---- irreducibility helpers -------------------------------------------------

// Degree-<4 polynomial arithmetic mod small prime p (u64 coefficients).
using ModPoly = std::array<uint64_t, 4>;

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const std::array<uint64_t, 4>& fred,
               uint64_t p) {
    // multiply then reduce by f = X^4 + fred[3] X^3 + ... + fred[0]
    std::array<uint64_t, 7> prod{};
    for (int i = 0; i < 4; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < 4; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 6; d >= 4; --d) {
        uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int j = 0; j < 4; ++j) prod[d - 4 + j] = (prod[d - 4 + j] + c * (p - fred[j])) % p;
    }
    return {prod[0], prod[1], prod[2], prod[3]};
}

ModPoly powmod_x(uint64_t e, const std::array<uint64_t, 4>& fred, uint64_t p) {
    ModPoly result{1, 0, 0, 0}, base{0, 1, 0, 0};
    while (e) {
        if (e & 1) result = mulmod(result, base, fred, p);
        base = mulmod(base, base, fred, p);
        e >>= 1;
    }
    return result;
}

ModPoly powmod_poly(ModPoly base, uint64_t e, const std::array<uint64_t, 4>& fred, uint64_t p) {
    ModPoly result{1, 0, 0, 0};
    while (e) {
        if (e & 1) result = mulmod(result, base, fred, p);
        base = mulmod(base, base, fred, p);
        e >>= 1;
    }
    return result;
}

int mp_deg(const std::vector<uint64_t>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[size_t(i)]) return i;
    return -1;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    int64_t t = 0, nt = 1, r = int64_t(p), nr = int64_t(a % p);
    while (nr) {
        int64_t q = r / nr;
        int64_t t2 = t - q * nt;
        t = nt;
        nt = t2;
        int64_t r2 = r - q * nr;
        r = nr;
        nr = r2;
    }
    return uint64_t(t < 0 ? t + int64_t(p) : t);
}

// gcd of polynomials over F_p (vectors constant-first).
std::vector<uint64_t> gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    while (mp_deg(b) >= 0) {
        int da = mp_deg(a), db = mp_deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        uint64_t inv = inv_mod(b[size_t(db)], p);
        for (int sh = da - db; sh >= 0; sh = mp_deg(a) - db) {
            uint64_t c = a[size_t(db + sh)] * inv % p;
            if (c)
                for (int j = 0; j <= db; ++j)
                    a[size_t(j + sh)] = (a[size_t(j + sh)] + (p - c) * b[size_t(j)]) % p;
            if (mp_deg(a) < db) break;
        }
        std::swap(a, b);
    }
    return a;
}

// True iff p certifies the monic quartic irreducible over Z (f irreducible mod p).
bool irreducible_mod_p(const IntQuartic& q, uint64_t p) {
    auto red = [&](const Int& c) {
        return uint64_t(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
    };
    std::array<uint64_t, 4> f{red(q.a0), red(q.a1), red(q.a2), red(q.a3)};
    // squarefree mod p first
    std::vector<uint64_t> fv{f[0], f[1], f[2], f[3], 1};
    std::vector<uint64_t> fd{f[1] % p, 2 * f[2] % p, 3 * f[3] % p, 4 % p};
    auto g0 = gcd_mod(fv, fd, p);
    if (mp_deg(g0) != 0) return false;
    // no degree-1 factor: gcd(X^p - X, f) = 1
    ModPoly xp = powmod_x(p, f, p);
    std::vector<uint64_t> h{xp[0], (xp[1] + p - 1) % p, xp[2], xp[3]};
    if (mp_deg(gcd_mod(fv, h, p)) != 0) return false;
    // no degree-2 factor: gcd(X^(p^2) - X, f) = 1
    ModPoly xp2 = powmod_poly(xp, p, f, p);
    std::vector<uint64_t> h2{xp2[0], (xp2[1] + p - 1) % p, xp2[2], xp2[3]};
    return mp_deg(gcd_mod(fv, h2, p)) == 0;
}

Rat eval_quartic(const IntQuartic& q, const Int& x) {
    Int v = (((x + q.a3) * x + q.a2) * x + q.a1) * x + q.a0;
    return Rat(v);
}

// Exact decision by divisor-pair enumeration (a0 != 0).
bool quartic_irreducible_exact(const IntQuartic& q) {
    Int abs_a0 = abs(q.a0);
    auto divs = divisors(factorize(abs_a0));
    Int p1 = ((Int(1) + q.a3 + q.a2 + q.a1 + q.a0));   // p(1)
    Int pm1 = ((Int(1) - q.a3 + q.a2 - q.a1 + q.a0));  // p(-1)
    // integer roots
    for (const Int& d : divs) {
        for (int s : {1, -1}) {
            Int r = s * d;
            if (p1 != 0 && r != 1 && mpz_divisible_p(p1.get_mpz_t(), Int(r - 1).get_mpz_t()) == 0)
                continue;
            if (pm1 != 0 && r != -1 && mpz_divisible_p(pm1.get_mpz_t(), Int(r + 1).get_mpz_t()) == 0)
                continue;
            if (eval_quartic(q, r) == 0) return false;
        }
    }
    // (X^2+uX+v)(X^2+wX+s) with v*s = a0
    for (const Int& dv : divs) {
        for (int sg : {1, -1}) {
            Int v = sg * dv;
            Int s = q.a0 / v;
            if (v > s) continue;  // unordered pairs once
            if (v == s) {
                if (q.a1 != q.a3 * v) continue;
                Int disc = q.a3 * q.a3 - 4 * (q.a2 - 2 * v);
                auto w = is_perfect_square(disc);
                if (!w) continue;
                if (is_even(q.a3 - *w)) return false;
            } else {
                Int num = q.a1 - q.a3 * v;
                Int den = s - v;
                if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) continue;
                Int u = num / den;
                Int w = q.a3 - u;
                if (v + s + u * w == q.a2) return false;
            }
        }
    }
    return true;
}

}  // namespace

ExactPoly::ExactPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (Rat& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::from_string(std::string_view s) {
    std::vector<Rat> cs;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view tok =
            s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string_view::npos) throw std::invalid_argument("empty coefficient");
        size_t b = tok.find_last_not_of(" \t");
        cs.push_back(parse_rat(tok.substr(a, b - a + 1)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ExactPoly(std::move(cs));
}

std::string ExactPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << cq::to_string(coeffs_[i]);
    }
    return os.str();
}

Rat ExactPoly::coeff(size_t i) const {
    if (i >= coeffs_.size()) return Rat(0);
    return coeffs_[i];
}

ExactPoly IntQuartic::poly() const {
    return ExactPoly({Rat(a0), Rat(a1), Rat(a2), Rat(a3), Rat(1)});
}

IntQuartic IntQuartic::from_poly(const ExactPoly& p) {
    if (p.degree() != 4 || p.coeff(4) != 1 || !is_integral(p))
        throw std::invalid_argument("IntQuartic: polynomial is not a monic integral quartic");
    return IntQuartic{Int(p.coeff(3).get_num()), Int(p.coeff(2).get_num()),
                      Int(p.coeff(1).get_num()), Int(p.coeff(0).get_num())};
}

Rat evaluate(const ExactPoly& p, const Rat& x) {
    Rat acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(size_t(i));
    return acc;
}

ExactPoly shift(const ExactPoly& p, const Rat& r) {
    std::vector<Rat> c(p.coeffs());
    const int n = p.degree();
    for (int j = 0; j <= n; ++j)
        for (int i = n - 1; i >= j; --i) c[size_t(i)] += r * c[size_t(i) + 1];
    return ExactPoly(std::move(c));
}

bool is_integral(const ExactPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [](const Rat& c) { return c.get_den() == 1; });
}

Rat discriminant(const ExactPoly& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (n == 1) return Rat(1);
    auto ip = clear_denominators(p);
    ExactPoly scaled;
    {
        std::vector<Rat> cs;
        for (const Int& c : ip.coeffs) cs.emplace_back(c);
        scaled = ExactPoly(std::move(cs));
    }
    auto dp = clear_denominators(derivative(scaled));
    Int res = resultant_int(ip.coeffs, dp.coeffs);
    int sign = (Int(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    Rat disc = Rat(sign * res) / Rat(ip.coeffs.back());
    // disc(L p) = L^(2n-2) disc(p)
    Rat scale(pow_int(ip.denom_scale, static_cast<unsigned long>(2 * n - 2)));
    Rat out = disc / scale;
    out.canonicalize();
    return out;
}

std::vector<Rat> rational_roots(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    auto ip = clear_denominators(p);
    std::vector<Int> c = ip.coeffs;
    std::vector<Rat> roots;
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low == c.size() - 1) {  // monomial
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Int tail = abs(c[low]);
    Int lead = abs(c.back());
    auto nums = divisors(factorize(tail));
    auto dens = divisors(factorize(lead));
    for (const Int& u : nums) {
        for (const Int& v : dens) {
            if (gcd_int(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rat cand(s * u, v);
                cand.canonicalize();
                if (evaluate(p, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool quartic_irreducible(const IntQuartic& q) {
    if (q.a0 == 0) return false;
    // repeated factors mean reducible over Q
    if (discriminant(q.poly()) == 0) return false;
    // Cheap certificates first when the constant term is large: a prime p
    // with f irreducible mod p proves irreducibility without factoring a0.
    if (abs(q.a0) > 1'000'000) {
        static const uint64_t ps[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                                      41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,
                                      89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
                                      149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197,
                                      199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263};
        for (uint64_t p : ps)
            if (irreducible_mod_p(q, p)) return true;
    }
    return quartic_irreducible_exact(q);
}

}  // namespace cq
