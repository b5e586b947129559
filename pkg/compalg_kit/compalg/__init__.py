"""Split composition algebras R, C, H, O and their multiplication geometry."""

from compalg_kit.compalg.algebra import (
    AlgebraTag,
    CompElement,
    bilinear,
    conj,
    mul,
    mul_operator,
    norm_q,
    re,
)
from compalg_kit.compalg.checks import check_composition_general, check_triality

__all__ = [
    "AlgebraTag",
    "CompElement",
    "bilinear",
    "conj",
    "mul",
    "mul_operator",
    "norm_q",
    "re",
    "check_composition_general",
    "check_triality",
]
