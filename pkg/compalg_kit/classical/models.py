# compalg_kit/classical/models.py

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, List, Tuple, Union

from compalg_kit.errors import FieldError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import ClassicalModelRef, ClassicalPayload, MatrixPayload
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK, determinant
from compalg_kit.jordan.hermitian import HermitianMatrix

GroupElement = Union[MatrixK, Tuple[MatrixK, MatrixK]]


@dataclass(frozen=True)
class ClassicalModel:
    """
    V^n_a: symmetric (a=1), full (a=2) or alternating 2n x 2n (a=4) matrices,
    with U_A B = A I^-1 B I^-1 A.

    The base point I is Id for a = 1, 2 and the block diagonal of
    J = [[0, -1], [1, 0]] for a = 4.
    """

    a: int
    n: int
    context: FieldContext

    def __post_init__(self) -> None:
        if self.a not in (1, 2, 4):
            raise ShapeError(f"a must be 1, 2 or 4, got {self.a}")
        if self.n < 1:
            raise ShapeError("n must be positive")

    @property
    def size(self) -> int:
        return 2 * self.n if self.a == 4 else self.n

    @property
    def base_point(self) -> MatrixK:
        ctx = self.context
        if self.a != 4:
            return MatrixK.identity(ctx, self.n)
        rows = [[ctx.zero()] * self.size for _ in range(self.size)]
        for k in range(self.n):
            rows[2 * k][2 * k + 1] = ctx.from_int(-1)
            rows[2 * k + 1][2 * k] = ctx.one()
        return MatrixK(ctx, tuple(tuple(r) for r in rows), self.size)

    @property
    def base_inverse(self) -> MatrixK:
        if self.a != 4:
            return self.base_point
        # J^-1 = -J
        return self.base_point.scale(self.context.from_int(-1))

    def in_carrier(self, m: MatrixK) -> bool:
        ctx = self.context
        if m.shape != (self.size, self.size) or m.context != ctx:
            return False
        rows = m.rows
        if self.a == 1:
            return all(rows[i][j] == rows[j][i] for i in range(self.n) for j in range(i))
        if self.a == 4:
            return all(ctx.is_zero(rows[i][i]) for i in range(self.size)) and all(
                ctx.is_zero(ctx.add(rows[i][j], rows[j][i]))
                for i in range(self.size)
                for j in range(i)
            )
        return True

    def require(self, *matrices: MatrixK) -> None:
        for m in matrices:
            if not self.in_carrier(m):
                raise PreconditionError(f"matrix is outside the carrier of V^{self.n}_{self.a}")


def carrier_basis(model: ClassicalModel) -> List[MatrixK]:
    ctx = model.context
    size = model.size

    def unit(entries: List[Tuple[int, int, int]]) -> MatrixK:
        rows = [[ctx.zero()] * size for _ in range(size)]
        for i, j, v in entries:
            rows[i][j] = ctx.from_int(v)
        return MatrixK(ctx, tuple(tuple(r) for r in rows), size)

    if model.a == 1:
        out = [unit([(i, i, 1)]) for i in range(size)]
        out += [unit([(i, j, 1), (j, i, 1)]) for i in range(size) for j in range(i + 1, size)]
        return out
    if model.a == 2:
        return [unit([(i, j, 1)]) for i in range(size) for j in range(size)]
    return [unit([(i, j, 1), (j, i, -1)]) for i in range(size) for j in range(i + 1, size)]


# ---------- Quadratic product and trace ----------


def u_classical(model: ClassicalModel, a: MatrixK, b: MatrixK) -> MatrixK:
    """A I^-1 B I^-1 A."""
    model.require(a, b)
    inv = model.base_inverse
    return a.mul(inv).mul(b).mul(inv).mul(a)


def trace_classical(model: ClassicalModel, a: MatrixK, b: MatrixK) -> Any:
    """
    tr(A I^-1 B I^-1) for a = 1, 2. For a = 4 half of it, written as
    -sum_{i<j} a_ij (I^-1 B I^-1)_ij so that no 1/2 appears.
    """
    ctx = model.context
    inv = model.base_inverse
    twisted = inv.mul(b).mul(inv)
    acc = ctx.zero()
    if model.a != 4:
        for i in range(model.size):
            for j in range(model.size):
                acc = ctx.add(acc, ctx.mul(a.rows[i][j], twisted.rows[j][i]))
        return acc
    for i in range(model.size):
        for j in range(i + 1, model.size):
            acc = ctx.sub(acc, ctx.mul(a.rows[i][j], twisted.rows[i][j]))
    return acc


def quadric_residual(model: ClassicalModel, a: MatrixK, b: MatrixK) -> MatrixK:
    """U_A B - T(A, B) A."""
    return u_classical(model, a, b).sub(a.scale(trace_classical(model, a, b)))


def rank_one_classical(model: ClassicalModel, a: MatrixK) -> bool:
    model.require(a)
    if a.is_zero():
        raise PreconditionError("rank one is defined for A != 0")
    return all(quadric_residual(model, a, b).is_zero() for b in carrier_basis(model))


def matrix_rank_characterization(model: ClassicalModel, a: MatrixK) -> bool:
    """Matrix rank 1 (a = 1, 2) or 2 (a = 4)."""
    model.require(a)
    if a.is_zero():
        raise PreconditionError("rank one is defined for A != 0")
    return a.rank() == (2 if model.a == 4 else 1)


# ---------- Structure group ----------


def _check_invertible(*gs: MatrixK) -> None:
    for g in gs:
        if not g.is_square() or g.context.is_zero(determinant(g)):
            raise FieldError("group element is singular")


def _split(model: ClassicalModel, g: GroupElement) -> Tuple[MatrixK, MatrixK]:
    if model.a == 2:
        if not isinstance(g, tuple):
            raise ShapeError("a = 2 acts through pairs (g, h)")
        return g
    if isinstance(g, tuple):
        raise ShapeError(f"a = {model.a} acts through single matrices")
    return g, g


def structure_action(model: ClassicalModel, g: GroupElement, a: MatrixK) -> MatrixK:
    """g A g^T, or g A h^T for a pair (g, h) when a = 2."""
    left, right = _split(model, g)
    _check_invertible(left, right)
    if left.nrows != model.size:
        raise ShapeError(f"group element must be {model.size} x {model.size}")
    return left.mul(a).mul(right.transpose())


def adjoint_action(model: ClassicalModel, g: GroupElement, b: MatrixK) -> MatrixK:
    """g* with T(g·A, B) = T(A, g*B)."""
    left, right = _split(model, g)
    if model.a == 4:
        base, inv = model.base_point, model.base_inverse
        return base.mul(left.transpose()).mul(inv).mul(b).mul(inv).mul(left).mul(base)
    return right.transpose().mul(b).mul(left)


def is_structure_element(model: ClassicalModel, g: GroupElement) -> bool:
    """
    U_{g·A} B = g·U_A(g* B) on carrier basis elements A and pairwise sums
    (U is quadratic in A, so this covers its polarization).
    """
    basis = carrier_basis(model)
    samples = list(basis) + [x.add(y) for i, x in enumerate(basis) for y in basis[i + 1 :]]
    for a in samples:
        moved = structure_action(model, g, a)
        for b in basis:
            lhs = u_classical(model, moved, b)
            rhs = structure_action(model, g, u_classical(model, a, adjoint_action(model, g, b)))
            if lhs != rhs:
                return False
    return True


def random_group_element(model: ClassicalModel, rng: random.Random) -> GroupElement:
    def one() -> MatrixK:
        while True:
            g = MatrixK(
                model.context,
                tuple(
                    tuple(model.context.random(rng) for _ in range(model.size))
                    for _ in range(model.size)
                ),
                model.size,
            )
            if not model.context.is_zero(determinant(g)):
                return g

    if model.a == 2:
        return (one(), one())
    return one()


def random_carrier_element(model: ClassicalModel, rng: random.Random) -> MatrixK:
    ctx = model.context
    acc = MatrixK.zeros(ctx, model.size, model.size)
    for b in carrier_basis(model):
        acc = acc.add(b.scale(ctx.random(rng)))
    return acc


def random_rank_one(model: ClassicalModel, rng: random.Random) -> MatrixK:
    """u u^T, u v^T or u v^T - v u^T with nonzero result."""
    ctx = model.context

    def vec() -> Tuple[Any, ...]:
        return tuple(ctx.random(rng) for _ in range(model.size))

    while True:
        u, v = vec(), vec()
        col = MatrixK(ctx, tuple((x,) for x in u), 1)
        if model.a == 1:
            m = col.mul(col.transpose())
        elif model.a == 2:
            m = col.mul(MatrixK(ctx, (v,), model.size))
        else:
            row = MatrixK(ctx, (v,), model.size)
            m = col.mul(row).sub(row.transpose().mul(col.transpose()))
        if not m.is_zero():
            return m


# ---------- Links to Hermitian matrices ----------


def from_hermitian_c(a: HermitianMatrix) -> MatrixK:
    """H_n(C) -> V^n_2: alpha_ij = e-part of a_ij, alpha_ji = f-part (i < j)."""
    if a.tag.kind != "C":
        raise PreconditionError("from_hermitian_c needs complex entries")
    ctx = a.context
    rows = [[a.entry(i, j)[0] for j in range(a.n)] for i in range(a.n)]
    return MatrixK(ctx, tuple(tuple(r) for r in rows), a.n)


# ---------- JSON ----------


def classical_from_payload(payload: ClassicalPayload) -> Tuple[ClassicalModel, MatrixK]:
    matrix = payload.matrix.to_matrix()
    model = ClassicalModel(payload.model.a, payload.model.n, matrix.context)
    return model, matrix


def classical_to_payload(model: ClassicalModel, m: MatrixK) -> ClassicalPayload:
    return ClassicalPayload(
        model=ClassicalModelRef(a=model.a, n=model.n), matrix=MatrixPayload.from_matrix(m)
    )
