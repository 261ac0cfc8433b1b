#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cq/conductor.hpp"
#include "cq/gras.hpp"
#include "cq/quartic.hpp"

namespace cq {

/// Full verdict record for one candidate polynomial/field.
/// monogenic refers to the root of `polynomial` generating the full ring
/// of integers (disc_poly == disc_field); it is unset only when the
/// conductor pipeline cannot run.
struct Certificate {
    std::optional<Int> z;
    std::optional<GrasParams> params;
    ExactPoly polynomial;
    bool irreducible = false;
    bool is_c4 = false;
    bool squarefree_a = false;
    bool squarefree_m_part = false;
    std::optional<Int> conductor;
    Int disc_poly;
    std::optional<Int> disc_field;
    std::optional<Int> index_square;  // disc_poly / disc_field
    std::optional<bool> monogenic;
    std::vector<std::string> reasons;
};

/// (z^2 - 2 squarefree, parity-appropriate m-part squarefree). |z| >= 2.
std::pair<bool, bool> squarefree_conditions(const Int& z);

/// End-to-end certification of the f_z family member. Failures are
/// encoded in the certificate, never thrown.
Certificate certify_z(const Int& z);

/// Certification of an explicit parameter tuple (t set). Preconditions
/// (system equations, integral irreducible polynomial) are hard errors;
/// a failed Hasse congruence with an integral polynomial is recorded as
/// a reason instead (the documented odd-m sign caveat).
Certificate certify_params(const GrasParams& p);

}  // namespace cq
