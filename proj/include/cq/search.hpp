#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cq/certify.hpp"

namespace cq {

struct SweepBounds {
    long a_max = 1;
    long b_max = 2;  // b iterates over even values only
    long x_max = 1;
    long g_max = 1;
};

struct SweepHit {
    GrasParams params;
    Certificate certificate;
};

struct SweepStats {
    uint64_t triples = 0;        // (a, b, x) visited
    uint64_t system_solutions = 0;  // (a,b,x,y,g,z) solving both equations
    uint64_t no_t = 0;           // dropped: no integral irreducible Hasse t
    uint64_t cert_failures = 0;  // dropped: certification precondition failed
    uint64_t duplicates = 0;     // collapsed by the +-X symmetry rule
};

/// All integer y with b(x^2 - y^2) + 2axy = +-2 (quadratic formula plus
/// exact square tests), sorted.
std::vector<Int> solve_first_eq(const Int& a, const Int& b, const Int& x);

/// All z >= 0 with m[z^2 - chi g c]^2 - 4g^2 = +-16, c = x^2 + y^2, sorted.
std::vector<Int> solve_second_eq(const Int& m, const Int& g, const Int& c, int chi);

/// The full parameter sweep. Deterministic emission order (lexicographic in
/// (a, b, x, y, g, z)), independent of the number of worker threads.
std::vector<SweepHit> sweep(const SweepBounds& bounds, int chi, unsigned jobs = 1,
                            SweepStats* stats = nullptr);

struct XyConstraintHit {
    Int g, m;
    int sign;  // +1: g^2 + 4 = m c^2, -1: g^2 - 4 = m c^2
    bool operator==(const XyConstraintHit&) const = default;
};

/// All g <= g_max with g^2 +- 4 = m c^2 for integral m >= 1.
std::vector<XyConstraintHit> xy_constraint_search(const Int& c, const Int& g_max);

/// Is 10x^7 + 42x^5 + 70x^3 + 70x - 32 a quadratic residue mod (x^2+1)^4?
/// x odd, x >= 3.
bool x_check(const Int& x);

/// Bounded probe for pairs (x, (x/2)^2 - 1) with 4 | x: does some
/// (g, m) with g^2 +- 4 = m c^2, g <= 10^6, extend to a solution of the
/// full system with z <= 10^4? Rejects x = 2 (mod 4).
bool x_check_even(const Int& x);

}  // namespace cq
