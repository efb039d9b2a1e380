"""Symbolic-numeric toolkit for the derivative value-sharing problem.

The heavy lifting lives in the C++ extension `_sharelab`; this package
re-exports its operations.
"""

from _sharelab import (  # noqa: F401
    classify,
    diff_squares_k3,
    dj_equation_check,
    enumerate_cases,
    family_iv_jet,
    jet_extend,
    mnk_feasible,
    mod_sieve_k4,
    parse_expr_canonical,
    pell_descent,
    refute_case_d3,
    refute_case_d4,
    resolve_case_d2,
    spherical_scan_expr,
    square_family_scan,
    verify,
    verify_expr,
)
