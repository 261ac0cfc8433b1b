#include "cq/quartic.hpp"

#include <algorithm>

#include "cq/factor.hpp"

namespace cq {

namespace {

using IntPoly = std::vector<Int>;  // constant first, no trailing zeros

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Int eval_int(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (int i = deg(p); i >= 0; --i) acc = acc * x + p[size_t(i)];
    return acc;
}

// Divide by positive content, preserving sign.
IntPoly primitive(IntPoly p) {
    Int g = 0;
    for (const Int& c : p) g = gcd_int(g, c);
    if (g > 1)
        for (Int& c : p) c /= g;
    return p;
}

IntPoly to_int_poly(const ExactPoly& p) {
    Int lcm = 1;
    for (const Rat& c : p.coeffs()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = l;
    }
    IntPoly out;
    for (const Rat& c : p.coeffs()) out.push_back(Int(c.get_num() * (lcm / c.get_den())));
    return primitive(std::move(out));
}

// -rem(a, b) over Q, scaled to a primitive integer polynomial (sign kept).
IntPoly neg_rem_primitive(const IntPoly& a, const IntPoly& b) {
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    const int db = deg(b);
    Rat lead(b[size_t(db)]);
    for (int i = deg(a); i >= db; --i) {
        Rat c = r[size_t(i)] / lead;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[size_t(i - db + j)] -= c * Rat(b[size_t(j)]);
        r[size_t(i)] = 0;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    // clear denominators and strip positive content
    Int lcm = 1;
    for (const Rat& c : r) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = l;
    }
    IntPoly out;
    for (const Rat& c : r) out.push_back(Int(-c.get_num() * (lcm / c.get_den())));
    return primitive(std::move(out));
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain{p};
    IntPoly d;
    for (int i = 1; i <= deg(p); ++i) d.push_back(Int(i) * p[size_t(i)]);
    chain.push_back(primitive(std::move(d)));
    while (deg(chain.back()) > 0) {
        IntPoly next = neg_rem_primitive(chain[chain.size() - 2], chain.back());
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations_at(const std::vector<IntPoly>& chain, const Int& x) {
    int var = 0, last = 0;
    for (const IntPoly& p : chain) {
        int s = sgn(eval_int(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_inf(const std::vector<IntPoly>& chain, int dir) {
    int var = 0, last = 0;
    for (const IntPoly& p : chain) {
        int s = sgn(p.back());
        if (dir < 0 && deg(p) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Squarefree part via euclidean gcd over Q.
IntPoly squarefree_part(const IntPoly& p) {
    IntPoly a = p, b;
    for (int i = 1; i <= deg(p); ++i) b.push_back(Int(i) * p[size_t(i)]);
    b = primitive(std::move(b));
    while (deg(b) >= 0 && !b.empty()) {
        IntPoly r = neg_rem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (deg(a) <= 0) return p;
    // exact division p / a over Q
    std::vector<Rat> q(p.size() - a.size() + 1), rem(p.size());
    for (size_t i = 0; i < p.size(); ++i) rem[i] = Rat(p[i]);
    Rat lead{Rat(a.back())};
    for (int i = deg(p); i >= deg(a); --i) {
        Rat c = rem[size_t(i)] / lead;
        q[size_t(i - deg(a))] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(a); ++j) rem[size_t(i - deg(a) + j)] -= c * Rat(a[size_t(j)]);
    }
    return to_int_poly(ExactPoly(std::move(q)));
}

void isolate(const std::vector<IntPoly>& chain, const IntPoly& orig, const Int& lo,
             const Int& hi, int vlo, int vhi, std::vector<Int>& out) {
    if (vlo - vhi <= 0) return;
    if (hi - lo == 1) {
        if (eval_int(orig, hi) == 0) out.push_back(hi);
        return;
    }
    Int mid = (lo + hi) / 2;
    int vmid = variations_at(chain, mid);
    isolate(chain, orig, lo, mid, vlo, vmid, out);
    isolate(chain, orig, mid, hi, vmid, vhi, out);
}

}  // namespace

bool dlw_reducible(const Int& r, const Int& s) {
    if (is_perfect_square(r * r - 4 * s))
        throw dlw_precondition_error("dlw_reducible: r^2 - 4s is a perfect square");
    auto c = is_perfect_square(s);
    if (!c) return false;
    return is_perfect_square(2 * *c - r).has_value() ||
           is_perfect_square(-2 * *c - r).has_value();
}

std::vector<Int> integer_roots_monic(const std::vector<Int>& coeffs) {
    IntPoly p = coeffs;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (deg(p) < 1) return {};
    IntPoly sf = squarefree_part(p);
    auto chain = sturm_chain(sf);
    Int maxc = 0;
    for (const Int& c : sf) maxc = std::max(maxc, Int(abs(c)));
    Int bound = maxc + 1;
    std::vector<Int> roots;
    if (eval_int(p, -bound) == 0) roots.push_back(-bound);
    isolate(chain, p, -bound, bound, variations_at(chain, -bound), variations_at(chain, bound),
            roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

GaloisReport kw_is_c4(const IntQuartic& p) {
    if (!quartic_irreducible(p))
        throw std::invalid_argument("kw_is_c4: input quartic is reducible over Q");
    const Int &a = p.a3, &b = p.a2, &c = p.a1, &d = p.a0;
    IntPoly resolvent{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Int(1)};
    GaloisReport rep;
    for (const Int& root : integer_roots_monic(resolvent)) rep.resolvent_rational_roots.emplace_back(root);
    if (rep.resolvent_rational_roots.size() != 1) return rep;  // is_c4 = false
    Rat sroot = rep.resolvent_rational_roots.front();
    rep.s = sroot;
    Int s = Int(sroot.get_num());
    // resolvent / (X - s) = X^2 + q1 X + q0
    Int q1 = resolvent[2] + s;
    Int q0 = resolvent[1] + s * q1;
    Int discE = q1 * q1 - 4 * q0;
    if (discE == 0) return rep;  // repeated roots; not C4 for separable input
    Int kE = squarefree_kernel(discE);
    rep.kernel_E = kE;
    Int disc1 = s * s - 4 * d;
    Int disc2 = a * a - 4 * (b - s);
    Int k1 = disc1 == 0 ? Int(1) : squarefree_kernel(disc1);
    Int k2 = disc2 == 0 ? Int(1) : squarefree_kernel(disc2);
    rep.split_evidence = std::make_pair(k1, k2);
    rep.is_c4 = (k1 == 1 || k1 == kE) && (k2 == 1 || k2 == kE);
    return rep;
}

bool all_roots_real(const IntQuartic& p) {
    ExactPoly ep = p.poly();
    if (discriminant(ep) == 0)
        throw std::domain_error("all_roots_real: polynomial has repeated roots");
    IntPoly ip = to_int_poly(ep);
    auto chain = sturm_chain(ip);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1) == 4;
}

}  // namespace cq
