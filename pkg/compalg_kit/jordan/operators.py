# compalg_kit/jordan/operators.py

from __future__ import annotations

from typing import Any, List

from compalg_kit.errors import PreconditionError
from compalg_kit.foundation.linalg import MatrixK
from compalg_kit.jordan.cubic import adjoint, cross, cross_matrix, gram_apply
from compalg_kit.jordan.hermitian import (
    HermitianMatrix,
    grid_product,
    standard_basis,
    trace_form_raw,
)


def u_operator(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """
    Quadratic product U_A B.

    Associative tags: the matrix product ABA. Octonions (n = 3 only):
    T(A, B) A - A^# x B.
    """
    a._same(b)
    if a.tag.kind == "O":
        if a.n != 3:
            raise PreconditionError("the octonionic U-operator needs n = 3")
        return a.scale(trace_form_raw(a, b)) - cross(adjoint(a), b)
    grid = a.grid()
    return HermitianMatrix.from_grid(a.n, a.tag, grid_product(a.tag, grid_product(a.tag, grid, b.grid()), grid))


def u_operator_matrix(a: HermitianMatrix) -> MatrixK:
    """Coordinate matrix of B -> U_A B."""
    ctx = a.context
    if a.tag.kind == "O":
        if a.n != 3:
            raise PreconditionError("the octonionic U-operator needs n = 3")
        coords = a.coordinates()
        paired = gram_apply(a.tag, coords)
        crossing = cross_matrix(adjoint(a))
        rows = tuple(
            tuple(
                ctx.sub(ctx.mul(coords[m], paired[col]), crossing[m][col])
                for col in range(len(coords))
            )
            for m in range(len(coords))
        )
        return MatrixK(ctx, rows, len(coords))
    columns = [u_operator(a, e).coordinates() for e in standard_basis(a.n, a.tag)]
    size = len(columns)
    return MatrixK(ctx, tuple(tuple(col[m] for col in columns) for m in range(size)), size)


def l_operator(a: HermitianMatrix) -> MatrixK:
    """
    Matrix of L_A: A^n -> A^n, (z_u) -> (sum_u a_tu z_u)_t.

    Vectors of A^n are flattened block by block in the algebra's coordinates.
    """
    tag = a.tag
    if not tag.is_associative:
        raise PreconditionError("L_A is only defined for associative algebras")
    d, n = tag.dim, a.n
    blocks = [[tag.operator_rows(a.entry(t, u), "left") for u in range(n)] for t in range(n)]
    rows: List[tuple] = []
    for t in range(n):
        for i in range(d):
            row: List[Any] = []
            for u in range(n):
                row.extend(blocks[t][u][i])
            rows.append(tuple(row))
    return MatrixK(tag.context, tuple(rows), n * d)
