"""Exact construction, certification and search of cyclic quartic monogenic
polynomials. All integer arithmetic is exact (GMP under the hood); integers
cross the boundary as Python ints and rationals as fractions.Fraction."""

from ._core import (  # noqa: F401
    GrasParams,
    all_roots_real,
    canonicalize_params,
    certify_params,
    certify_z,
    choose_t,
    discriminant,
    dlw_reducible,
    evaluate,
    factorize,
    family_canonical,
    family_params,
    field_discriminant,
    further_family_a,
    further_family_b,
    fz_polynomial,
    fz_presented,
    gras_polynomial,
    hasse_integral,
    is_integral,
    is_perfect_square,
    is_prime,
    is_qr_mod,
    is_squarefree,
    kw_is_c4,
    psi_polynomial,
    quadratic_conductor,
    quartic_irreducible,
    rational_roots,
    scan_t,
    shift,
    solve_first_eq,
    solve_second_eq,
    squarefree_conditions,
    squarefree_kernel,
    sw_conductor,
    sweep,
    theta_numeric,
    verify_system,
    x3y4_family,
    x_check,
    x_check_even,
    xy_constraint_search,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
