#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cq/integers.hpp"

namespace cq {

/// Unique generator data: K = Q(sqrt(A(D + B sqrt(D)))) with A squarefree
/// odd, D = B^2 + C^2 squarefree, B > 0, C > 0, gcd(A, D) = 1.
struct CanonicalCyclicQuartic {
    Int A, B, C, D;

    bool operator==(const CanonicalCyclicQuartic&) const = default;
};

/// Raised when a squarefree precondition fails; carries the square factor.
struct squarefree_error : std::domain_error {
    squarefree_error(std::string msg, Int prime)
        : std::domain_error(std::move(msg)), offending_prime(std::move(prime)) {}
    Int offending_prime;
};

/// Spearman-Williams: conductor = 2^l |A| D with l in {0, 2, 3} by the
/// residue table. Validates the canonical-form invariants.
Int sw_conductor(const CanonicalCyclicQuartic& c);

/// Closed-form canonical data for the base family:
/// z even -> (a/2, a/2, 1, m/4); z odd -> (a, 2, a, m).
/// Throws squarefree_error when A or D is not squarefree.
CanonicalCyclicQuartic family_canonical(const Int& z);

/// Conductor m of the quadratic subfield (with parity sanity checks).
Int quadratic_conductor(const Int& z);

/// Conductor-discriminant evaluation m^3 g^2 for a C4 field of conductor
/// mg over a quadratic subfield of conductor m.
Int field_discriminant(const Int& m, const Int& g);

/// All ordered (B, C), B, C >= 1, with B^2 + C^2 = d, via Cornacchia on the
/// prime factorization. d squarefree.
std::vector<std::pair<Int, Int>> sum_of_two_squares(const Int& d);

/// General reduction of K = Q(sqrt(2g(m + a sqrt(m)))) to canonical form.
/// Works with non-squarefree m and g: square parts are absorbed exactly.
CanonicalCyclicQuartic canonicalize_params(const Int& a, const Int& g, const Int& m);

/// Discriminant of Q(sqrt(D)), D squarefree: D when D = 1 (mod 4), else 4D.
Int quad_field_conductor(const Int& D);

/// disc(K) = cond(Q(sqrt(D))) * conductor(K)^2 via conductor-discriminant.
Int true_field_discriminant(const CanonicalCyclicQuartic& c);

}  // namespace cq
