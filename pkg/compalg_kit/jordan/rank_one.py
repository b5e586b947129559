# compalg_kit/jordan/rank_one.py

from __future__ import annotations

from typing import Any, Dict, List

from compalg_kit.errors import PreconditionError, ShapeError
from compalg_kit.foundation.linalg import MatrixK
from compalg_kit.foundation.tally import bullet_report
from compalg_kit.jordan.hermitian import HermitianMatrix, standard_basis, trace_form_raw, tr
from compalg_kit.jordan.operators import l_operator, u_operator, u_operator_matrix


def _nonzero(a: HermitianMatrix) -> None:
    if a.is_zero():
        raise PreconditionError("rank one is defined for A != 0")


def jordan_rank_one(a: HermitianMatrix) -> bool:
    """U_A B = T(A, B) A for every B of the standard basis."""
    _nonzero(a)
    ring = a.context
    u = u_operator_matrix(a)
    coords = a.coordinates()
    for col, basis_element in enumerate(standard_basis(a.n, a.tag)):
        t = trace_form_raw(a, basis_element)
        for m, am in enumerate(coords):
            if u.rows[m][col] != ring.mul(t, am):
                return False
    return True


def minor_residuals(a: HermitianMatrix) -> List[Any]:
    """
    The six 2x2 minor equations of a 3x3 Hermitian matrix, flattened:
    three scalars, then three algebra-valued residuals in coordinates.
    """
    if a.n != 3:
        raise ShapeError("minor equations need n = 3")
    tag, ring = a.tag, a.context
    d = [a.diag[0], a.diag[1], a.diag[2]]

    def e(i: int, j: int):
        return a.entry(i - 1, j - 1)

    out: List[Any] = [
        ring.sub(ring.mul(d[0], d[1]), tag.norm(e(1, 2))),
        ring.sub(ring.mul(d[0], d[2]), tag.norm(e(1, 3))),
        ring.sub(ring.mul(d[1], d[2]), tag.norm(e(2, 3))),
    ]
    products = [
        tag.sub(tag.scale(d[0], e(2, 3)), tag.mul(e(2, 1), e(1, 3))),
        tag.sub(tag.mul(e(3, 2), e(2, 1)), tag.scale(d[1], e(3, 1))),
        tag.sub(tag.scale(d[2], e(2, 1)), tag.mul(e(2, 3), e(3, 1))),
    ]
    for x in products:
        out.extend(x)
    return out


def minors_rank_one_3(a: HermitianMatrix) -> bool:
    _nonzero(a)
    ring = a.context
    return all(ring.is_zero(r) for r in minor_residuals(a))


def l_rank_tests(a: HermitianMatrix) -> Dict[str, Any]:
    """rank L_A is a multiple of dim A, and equals dim A iff A has rank one."""
    _nonzero(a)
    rank = l_operator(a).rank()
    d = a.tag.dim
    rank_one = jordan_rank_one(a)
    return bullet_report(
        {
            "rank_divisible": rank % d == 0,
            "rank_equals_dim_iff_rank_one": (rank == d) == rank_one,
        },
        rank=rank,
        rank_one=rank_one,
    )


def square(a: HermitianMatrix) -> HermitianMatrix:
    """A^2 = U_A(Id)."""
    return u_operator(a, HermitianMatrix.identity(a.n, a.tag))


def square_test(a: HermitianMatrix) -> bool:
    """A^2 = tr(A) A."""
    if a.n != 3:
        raise ShapeError("square test needs n = 3")
    _nonzero(a)
    return square(a) == a.scale(tr(a).value)


# ---------- Quaternionic Hermitian matrices as alternating matrices ----------


def scorza_map(a: HermitianMatrix) -> MatrixK:
    """
    I · M(A), with M(A) the block matrix of L_A restricted to R(e)^n in the
    basis {E11, E21} (the block of a_tu is a_tu itself) and I the block
    diagonal of J = [[0, -1], [1, 0]]. The result is alternating.
    """
    if a.tag.kind != "H":
        raise PreconditionError("scorza_map needs quaternionic entries")
    ctx = a.context
    n = a.n
    rows: List[List[Any]] = [[ctx.zero()] * (2 * n) for _ in range(2 * n)]
    for t in range(n):
        for u in range(n):
            m11, m12, m21, m22 = a.entry(t, u)
            # J * [[m11, m12], [m21, m22]] = [[-m21, -m22], [m11, m12]]
            rows[2 * t][2 * u] = ctx.neg(m21)
            rows[2 * t][2 * u + 1] = ctx.neg(m22)
            rows[2 * t + 1][2 * u] = m11
            rows[2 * t + 1][2 * u + 1] = m12
    return MatrixK(ctx, tuple(tuple(r) for r in rows), 2 * n)


def is_alternating(m: MatrixK) -> bool:
    ctx = m.context
    n = m.nrows
    if not m.is_square():
        return False
    for i in range(n):
        if not ctx.is_zero(m.rows[i][i]):
            return False
        for j in range(i + 1, n):
            if not ctx.is_zero(ctx.add(m.rows[i][j], m.rows[j][i])):
                return False
    return True
