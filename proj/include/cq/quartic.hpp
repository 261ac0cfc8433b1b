#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cq/poly.hpp"

namespace cq {

/// Thrown by dlw_reducible when r^2 - 4s is a perfect square (the
/// criterion's hypothesis fails and its formula is not trustworthy).
struct dlw_precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Reducibility of X^4 + rX^2 + s over Z, assuming r^2 - 4s is not a
/// perfect square: reducible iff s = c^2 and 2c-r or -2c-r is a square.
bool dlw_reducible(const Int& r, const Int& s);

struct GaloisReport {
    bool is_c4 = false;
    std::vector<Rat> resolvent_rational_roots;
    std::optional<Rat> s;                            // the unique rational root
    std::optional<Int> kernel_E;                     // squarefree kernel defining E
    std::optional<std::pair<Int, Int>> split_evidence;  // kernels of g's two factors
};

/// Kappe-Warren classification: C4 iff the resolvent cubic
/// r(X) = X^3 - bX^2 + (ac-4d)X - (a^2 d - 4bd + c^2) has exactly one
/// rational root s and (X^2-sX+d)(X^2+aX+(b-s)) splits in E.
/// Input must be irreducible (rejected otherwise).
GaloisReport kw_is_c4(const IntQuartic& p);

/// Exact real-root count via Sturm sequences; true iff all four roots
/// are real. Requires disc != 0.
bool all_roots_real(const IntQuartic& p);

/// All integer roots of a monic integer polynomial (constant first),
/// found by Sturm isolation; no factorization of the constant term.
std::vector<Int> integer_roots_monic(const std::vector<Int>& coeffs);

}  // namespace cq
