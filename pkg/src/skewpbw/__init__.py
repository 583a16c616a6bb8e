"""Exact arithmetic in skew PBW extensions."""
from .coeff import QQ, Ring, RingElem, frac_field, laurent_ring, parse_ring, poly_ring
from .dsl import ParseError, emit, parse_definition, parse_expr
from .engine import mul, push_coeff, reorder, right_expand, sigma_power, verify_identities
from .poly import SkewPoly, cmp_mon
from .presentation import (
    AffineTail,
    DerivSpec,
    EndoSpec,
    Presentation,
    apply_deriv,
    apply_endo,
    check_confluence,
    flatten,
    validate,
)
from .quantum import QuantumPresentation, invert_term, ore_left_witness, ore_right_witness, qmul

__version__ = "0.1.0"
