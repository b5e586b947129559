# compalg_kit/cubic27/theta.py

"""
The linear bijection Theta: W = M_3(K)^3 -> H_3(O) with det3 o Theta = beta.

Every coordinate of Theta(A, B, C) is plus or minus one of the 27 matrix
entries, recorded in THETA_TABLE. Octonions are Cayley pairs (X, Y) of 2x2
matrices, each written row-major (E11, E12, E21, E22). The matrix has
diagonal (r1, r2, r3) and

    a_23 = x1,   a_31 = x2,   a_21 = x3.

All signs in the table are pinned by the identity det3 o Theta = beta over Z;
note c22 enters x2 with a minus sign and both blocks of x3 are
V = -[[a22, a23], [a32, a33]] and W = [[-c21, -b11], [-c11, b12]].
"""

from __future__ import annotations

from typing import Any, Dict, List, Mapping, Tuple

from compalg_kit.compalg.algebra import AlgebraTag, Coords
from compalg_kit.cubic27.incidence import POINT_LABELS, beta_polynomial
from compalg_kit.errors import PreconditionError, ShapeError
from compalg_kit.foundation.polynomial import POLY, Polynomial
from compalg_kit.jordan.cubic import det3_raw
from compalg_kit.jordan.hermitian import HermitianMatrix

Entry = Tuple[int, str]

THETA_TABLE: Dict[str, Tuple[Entry, ...]] = {
    "r": ((1, "b13"), (1, "c31"), (-1, "a11")),
    # x1 = (P, R)
    "x1": (
        (1, "a21"), (-1, "c33"), (1, "a31"), (1, "c32"),
        (1, "b31"), (-1, "b21"), (-1, "b32"), (1, "b22"),
    ),
    # x2 = (S, U)
    "x2": (
        (1, "a12"), (1, "a13"), (-1, "b33"), (1, "b23"),
        (-1, "c22"), (-1, "c23"), (-1, "c12"), (-1, "c13"),
    ),
    # x3 = (V, W)
    "x3": (
        (-1, "a22"), (-1, "a23"), (-1, "a32"), (-1, "a33"),
        (-1, "c21"), (-1, "b11"), (-1, "c11"), (1, "b12"),
    ),
}  # fmt: skip


def _read(ring: Any, values: Mapping[str, Any], entries: Tuple[Entry, ...]) -> Coords:
    return tuple(
        values[label] if sign > 0 else ring.neg(values[label]) for sign, label in entries
    )


def theta_raw(ring: Any, values: Mapping[str, Any]) -> HermitianMatrix:
    """Theta on raw ring values keyed by the labels a11..c33."""
    missing = [p for p in POINT_LABELS if p not in values]
    if missing:
        raise ShapeError(f"missing coordinates: {missing[:3]}")
    tag = AlgebraTag("O", ring)
    diag = _read(ring, values, THETA_TABLE["r"])
    x1 = _read(ring, values, THETA_TABLE["x1"])
    x2 = _read(ring, values, THETA_TABLE["x2"])
    x3 = _read(ring, values, THETA_TABLE["x3"])
    # stored entries are a_12 = conj(x3), a_13 = conj(x2), a_23 = x1
    return HermitianMatrix.from_upper(
        3,
        tag,
        diag,
        {(0, 1): tag.conj(x3), (0, 2): tag.conj(x2), (1, 2): x1},
    )


def theta_inverse_raw(a: HermitianMatrix) -> Dict[str, Any]:
    if a.tag.kind != "O" or a.n != 3:
        raise PreconditionError("theta_inverse needs a 3x3 octonionic Hermitian matrix")
    ring = a.context
    read = {
        "r": tuple(a.diag),
        "x1": a.entry(1, 2),
        "x2": a.entry(2, 0),
        "x3": a.entry(1, 0),
    }
    out: Dict[str, Any] = {}
    for name, entries in THETA_TABLE.items():
        for (sign, label), value in zip(entries, read[name]):
            out[label] = value if sign > 0 else ring.neg(value)
    return out


def symbolic_values() -> Dict[str, Polynomial]:
    return {p: POLY.variable(p) for p in POINT_LABELS}


def det_theta_polynomial() -> Polynomial:
    return det3_raw(theta_raw(POLY, symbolic_values()))


def det_theta_identity() -> Dict[str, Any]:
    """det3(Theta(A, B, C)) and beta compared as polynomials over Z."""
    lhs = det_theta_polynomial()
    rhs = beta_polynomial()
    diff = lhs - rhs
    mismatches: List[Dict[str, Any]] = []
    for monomial, coeff in diff.items():
        if len(mismatches) >= 5:
            break
        mismatches.append(
            {
                "monomial": list(monomial),
                "det_theta": lhs.coefficient(monomial),
                "beta": rhs.coefficient(monomial),
            }
        )
    return {
        "success": diff.is_zero(),
        "det_theta_terms": len(lhs),
        "beta_terms": len(rhs),
        "mismatches": mismatches,
    }


def theta_coordinate_matrix() -> List[List[int]]:
    """27 x 27 integer matrix of Theta from the labels to coordinates()."""
    columns: List[Tuple[int, ...]] = []
    for label in POINT_LABELS:
        values = {p: POLY.from_int(1 if p == label else 0) for p in POINT_LABELS}
        coords = theta_raw(POLY, values).coordinates()
        columns.append(tuple(c.coefficient(()) for c in coords))
    return [[col[m] for col in columns] for m in range(len(POINT_LABELS))]
