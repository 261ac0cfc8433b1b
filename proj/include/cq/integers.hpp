#pragma once

#include <gmpxx.h>

#include <string>

namespace cq {

using Int = mpz_class;
using Rat = mpq_class;

// Mathematical residue in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Floor square root of n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cq
