#include "cq/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cq/factor.hpp"

namespace cq {

namespace {

// Lexicographic hit key (a, b, x, y, g, z, t).
auto hit_key(const SweepHit& h) {
    const GrasParams& p = h.params;
    return std::tie(p.a, p.b, p.x, p.y, p.g, p.z, *p.t);
}

// Collapse key per the +-X symmetry rule: same conductor and field
// discriminant with the same polynomial up to X -> -X.
std::string collapse_key(const SweepHit& h) {
    const Certificate& c = h.certificate;
    ExactPoly p = c.polynomial;
    std::vector<Rat> neg;
    for (int i = 0; i <= p.degree(); ++i) {
        Rat coef = p.coeff(size_t(i));
        neg.push_back(i % 2 ? -coef : coef);
    }
    ExactPoly pneg{std::move(neg)};
    std::string canon = std::min(p.to_string(), pneg.to_string());
    std::string key = canon + "|";
    if (c.conductor) key += to_string(*c.conductor);
    key += "|";
    if (c.disc_field) key += to_string(*c.disc_field);
    return key;
}

void process_cell(const Int& a, const Int& b, const SweepBounds& bounds, int chi,
                  std::vector<SweepHit>& out, SweepStats& stats) {
    Int m = a * a + b * b;
    for (Int x = 1; x <= bounds.x_max; ++x) {
        ++stats.triples;
        std::vector<Int> ys = solve_first_eq(a, b, x);
        if (ys.empty()) continue;
        for (const Int& y : ys) {
            Int c = x * x + y * y;
            for (Int g = 1; g <= bounds.g_max; ++g) {
                for (const Int& z : solve_second_eq(m, g, c, chi)) {
                    ++stats.system_solutions;
                    GrasParams p(a, b, g, m, x, y, z, chi);
                    auto t = scan_t(p, true);
                    if (!t) {
                        ++stats.no_t;
                        continue;
                    }
                    p.t = *t;
                    try {
                        Certificate cert = certify_params(p);
                        out.push_back(SweepHit{p, std::move(cert)});
                    } catch (const std::exception&) {
                        ++stats.cert_failures;
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<Int> solve_first_eq(const Int& a, const Int& b, const Int& x) {
    // b y^2 - 2ax y - (b x^2 - 2 eps) = 0, eps = +-1
    std::vector<Int> out;
    Int m = a * a + b * b;
    for (int eps : {1, -1}) {
        Int rad = x * x * m - 2 * eps * b;
        auto root = is_perfect_square(rad);
        if (!root) continue;
        for (int sr : {1, -1}) {
            Int num = a * x + sr * *root;
            if (num % b == 0) out.push_back(num / b);
            if (sr == 1 && *root == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> solve_second_eq(const Int& m, const Int& g, const Int& c, int chi) {
    // (z^2 - chi g c)^2 = (4g^2 +- 16)/m
    std::vector<Int> out;
    for (int eps : {1, -1}) {
        Int num = 4 * g * g + 16 * eps;
        if (num < 0 || num % m != 0) continue;
        auto q = is_perfect_square(num / m);
        if (!q) continue;
        for (int sq : {1, -1}) {
            Int z2 = chi * g * c + sq * *q;
            if (z2 < 0) continue;
            if (auto z = is_perfect_square(z2)) out.push_back(*z);
            if (sq == 1 && *q == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SweepHit> sweep(const SweepBounds& bounds, int chi, unsigned jobs,
                            SweepStats* stats_out) {
    // contiguous chunks of the flattened (a, b) outer grid
    const size_t b_count = size_t(bounds.b_max >= 2 ? bounds.b_max / 2 : 0);
    const size_t cell_count = size_t(bounds.a_max > 0 ? bounds.a_max : 0) * b_count;
    if (jobs == 0) jobs = 1;
    jobs = std::min<size_t>(jobs, cell_count ? cell_count : 1);
    std::vector<std::vector<SweepHit>> partial(jobs);
    std::vector<SweepStats> pstats(jobs);
    const size_t per = (cell_count + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        size_t lo = w * per, hi = std::min(cell_count, (w + 1) * per);
        workers.emplace_back([&, lo, hi, w] {
            for (size_t i = lo; i < hi; ++i) {
                long a = long(i / b_count) + 1;
                long b = 2 * (long(i % b_count) + 1);
                process_cell(Int(a), Int(b), bounds, chi, partial[w], pstats[w]);
            }
        });
    }
    for (auto& th : workers) th.join();

    std::vector<SweepHit> merged;
    SweepStats stats;
    for (unsigned w = 0; w < jobs; ++w) {
        for (auto& h : partial[w]) merged.push_back(std::move(h));
        stats.triples += pstats[w].triples;
        stats.system_solutions += pstats[w].system_solutions;
        stats.no_t += pstats[w].no_t;
        stats.cert_failures += pstats[w].cert_failures;
    }
    std::sort(merged.begin(), merged.end(),
              [](const SweepHit& u, const SweepHit& v) { return hit_key(u) < hit_key(v); });
    // duplicate suppression, keeping the lexicographically least tuple
    std::map<std::string, size_t> seen;
    std::vector<SweepHit> out;
    for (auto& h : merged) {
        std::string key = collapse_key(h);
        if (seen.count(key)) {
            ++stats.duplicates;
            continue;
        }
        seen[key] = out.size();
        out.push_back(std::move(h));
    }
    if (stats_out) *stats_out = stats;
    return out;
}

std::vector<XyConstraintHit> xy_constraint_search(const Int& c, const Int& g_max) {
    if (c < 1) throw std::invalid_argument("xy_constraint_search: c >= 1 required");
    std::vector<XyConstraintHit> out;
    Int c2 = c * c;
    for (Int g = 1; g <= g_max; ++g) {
        for (int sign : {1, -1}) {
            Int num = g * g + 4 * sign;
            if (num < c2 || num % c2 != 0) continue;
            out.push_back(XyConstraintHit{g, num / c2, sign});
        }
    }
    return out;
}

bool x_check(const Int& x) {
    if (is_even(x) || x < 3)
        throw std::invalid_argument("x_check: x must be odd and >= 3");
    Int val = 10 * pow_int(x, 7) + 42 * pow_int(x, 5) + 70 * pow_int(x, 3) + 70 * x - 32;
    Int modulus = pow_int(x * x + 1, 4);
    return is_qr_mod(val, modulus);
}

bool x_check_even(const Int& x) {
    if (mod_floor(x, 4) == 2)
        throw std::invalid_argument(
            "x_check_even: x = 2 (mod 4) makes y even, so the first equation "
            "cannot hold (4 divides the left-hand side)");
    if (x < 4 || mod_floor(x, 4) != 0)
        throw std::invalid_argument("x_check_even: 4 | x required");
    Int y = (x / 2) * (x / 2) - 1;
    Int c = x * x + y * y;
    const Int g_bound = 1'000'000;
    const Int z_bound = 10'000;
    for (const auto& hit : xy_constraint_search(c, g_bound)) {
        auto zs = solve_second_eq(hit.m, hit.g, c, 1);
        bool any_z = std::any_of(zs.begin(), zs.end(),
                                 [&](const Int& z) { return z <= z_bound; });
        if (!any_z) continue;
        // need m = a^2 + b^2 with b even satisfying the first equation
        for (Int a = 1; a * a < hit.m; ++a) {
            auto b = is_perfect_square(hit.m - a * a);
            if (!b || *b == 0 || is_odd(*b)) continue;
            for (int sa : {1, -1}) {
                Int e1 = *b * (x * x - y * y) + 2 * sa * a * x * y;
                if (e1 == 2 || e1 == -2) return true;
            }
        }
    }
    return false;
}

}  // namespace cq
