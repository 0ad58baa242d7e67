"""Finite-ring workbench for strongly g(x)-clean decompositions."""

from .decompose import (
    Verdict,
    Witness,
    check_witness,
    clean_check,
    gx_witness,
    integers_gx_check,
    is_valid,
    lemma46_conditions,
    p47_disjunction,
    ring_check,
    strongly_clean_witness,
    u_n_set,
    unit_plus_root_witness,
)
from .parsing import parse_poly_literal, parse_ring_spec
from .poly import CentralPolynomial, divide_monic_quadratic, evaluate, induced_poly, int_poly, make_poly, roots
from .ring import (
    FiniteGroup,
    FiniteRing,
    RingMap,
    canonical_epi,
    canonical_int,
    cyclic_group,
    make_corner,
    make_group_ring,
    make_matrix,
    make_product,
    make_quotient,
    make_triangular,
    make_trunc_power_series,
    make_zn,
    verify_axioms,
)

__version__ = "0.1.0"
