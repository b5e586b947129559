"""Hermitian Jordan algebras H_n(A), their cubic norm and rank-one geometry."""

from compalg_kit.jordan.cubic import adjoint, cross, det3
from compalg_kit.jordan.hermitian import HermitianMatrix, tr, trace_form
from compalg_kit.jordan.octonion_plane import classify_payload, classify_rank_one_octonion, octonion_quadrics
from compalg_kit.jordan.operators import l_operator, u_operator
from compalg_kit.jordan.rank_one import (
    jordan_rank_one,
    l_rank_tests,
    minors_rank_one_3,
    scorza_map,
    square_test,
)
from compalg_kit.jordan.veronese import indeterminacy_member, veronese

__all__ = [
    "HermitianMatrix",
    "adjoint",
    "classify_payload",
    "classify_rank_one_octonion",
    "cross",
    "det3",
    "indeterminacy_member",
    "jordan_rank_one",
    "l_operator",
    "l_rank_tests",
    "minors_rank_one_3",
    "octonion_quadrics",
    "scorza_map",
    "square_test",
    "tr",
    "trace_form",
    "u_operator",
    "veronese",
]
