"""Exact lattices of homogeneous forms: Hilbert functions, heights, short
vectors, interpolation, and the inequality checkers.

Structured arguments (forms, schemes, lattices) are plain dicts in the same
JSON layout the CLI reads and writes.
"""

from arlat._core import (  # noqa: F401
    __version__,
    arith_hilbert,
    arith_hilbert_ambient,
    arith_hilbert_on_x,
    bezout_check,
    build_chain,
    check_3bew,
    check_alHilbert,
    check_alHilbinf,
    check_arHilbert_part1,
    check_arHilbert_parts23,
    check_mlnull,
    coefficient_sup_bound,
    combine_avoiding_zeros,
    divisor_height,
    form_product,
    fs_log_integral,
    hilbert_fn,
    interpolate,
    l2_inner_product,
    minkowski_bound,
    monomial_norm_sq,
    point_height,
    saturate,
    sharp_bezout_check,
    short_vector,
    split_divisor_height_oracle,
    stoll_number,
    stoll_number_exact,
    transcendence_profile,
    vanishing_lattice,
)
