"""Exact and numeric computations for skew braces and post-Lie algebras.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from bracekit._core import (  # noqa: F401
    BracekitError,
    FiniteGroup,
    FiniteSkewBrace,
    GroupLaw,
    LieAlgebra,
    PostLieAlgebra,
    a11_post_lie,
    all_ideals,
    all_ideals_lowdim,
    automorphism_count,
    brace_derived_series,
    brace_law_preset,
    brace_law_preset_names,
    braces_isomorphic,
    check_brace_numeric,
    check_jacobi,
    check_postlie,
    classify_triviality,
    cli_run,
    count_braces,
    cyclic_group,
    enumerate_braces,
    extract_and_rationalize,
    group_preset,
    group_preset_names,
    holomorph,
    identify_group,
    is_abstractly_simple,
    is_semisimple,
    is_simple_algebra,
    is_simple_brace_infinitesimal,
    is_solvable_algebra,
    is_solvable_group,
    isomorphic,
    killing_form,
    lambda_numeric,
    law_preset,
    parse_group_law,
    quotient,
    rigidity_classify,
    simple_summand_count,
    sl2,
    so3,
    symmetric_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
