# compalg_kit/cubic27/forms.py

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Tuple

from compalg_kit.cubic27.incidence import (
    MATRIX_NAMES,
    POINT_LABELS,
    beta_polynomial,
    beta_raw,
    evaluate_alpha,
)
from compalg_kit.cubic27.theta import theta_inverse_raw, theta_raw
from compalg_kit.errors import FieldError, ShapeError
from compalg_kit.foundation.fields import FieldContext, Scalar
from compalg_kit.foundation.linalg import MatrixK, determinant, inverse
from compalg_kit.foundation.polynomial import Polynomial
from compalg_kit.foundation.tally import bullet_report
from compalg_kit.jordan.hermitian import HermitianMatrix
from compalg_kit.jordan.octonion_plane import on_quadrics
from compalg_kit.jordan.rank_one import jordan_rank_one


@dataclass(frozen=True)
class GridTriple:
    """(A, B, C) in W = M_3(K)^3."""

    a: MatrixK
    b: MatrixK
    c: MatrixK

    def __post_init__(self) -> None:
        for m in (self.a, self.b, self.c):
            if m.shape != (3, 3):
                raise ShapeError("grid triples are 3x3 matrices")
        if not self.a.context == self.b.context == self.c.context:
            raise FieldError("grid triple matrices must share a field")

    @property
    def context(self) -> FieldContext:
        return self.a.context

    @classmethod
    def zero(cls, ctx: FieldContext) -> "GridTriple":
        z = MatrixK.zeros(ctx, 3, 3)
        return cls(z, z, z)

    @classmethod
    def from_values(cls, ctx: FieldContext, values: Mapping[str, Any]) -> "GridTriple":
        mats = [
            MatrixK.from_rows(
                ctx, [[values[f"{m}{i}{j}"] for j in range(1, 4)] for i in range(1, 4)]
            )
            for m in MATRIX_NAMES
        ]
        return cls(*mats)

    def values(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for name, m in zip(MATRIX_NAMES, (self.a, self.b, self.c)):
            for i in range(3):
                for j in range(3):
                    out[f"{name}{i + 1}{j + 1}"] = m.rows[i][j]
        return out

    def coordinates(self) -> Tuple[Any, ...]:
        values = self.values()
        return tuple(values[p] for p in POINT_LABELS)


def random_triple(ctx: FieldContext, rng: random.Random) -> GridTriple:
    return GridTriple.from_values(ctx, {p: ctx.random(rng) for p in POINT_LABELS})


# ---------- Cubic forms ----------


def evaluate_beta(t: GridTriple) -> Scalar:
    """det A + det B + det C - tr(ABC)."""
    ctx = t.context
    return Scalar(ctx, beta_raw(ctx, t.a.rows, t.b.rows, t.c.rows))


def evaluate_alpha_scalar(t: GridTriple) -> Scalar:
    """alpha through the 45 signed planes, on the same 27 coordinates."""
    return Scalar(t.context, evaluate_alpha(t.values(), t.context))


@lru_cache(maxsize=None)
def _beta_partials() -> Tuple[Polynomial, ...]:
    beta = beta_polynomial()
    return tuple(beta.derivative(p) for p in POINT_LABELS)


def beta_gradient(t: GridTriple) -> List[Scalar]:
    ctx = t.context
    values = t.values()
    return [Scalar(ctx, d.evaluate(values, ctx)) for d in _beta_partials()]


# ---------- SL_3^3 action ----------


def _invertible(m: MatrixK) -> MatrixK:
    if m.shape != (3, 3):
        raise ShapeError("the action uses 3x3 matrices")
    if m.context.is_zero(determinant(m)):
        raise FieldError("matrix is singular")
    return inverse(m)


def triple_action(m: MatrixK, n: MatrixK, p: MatrixK, t: GridTriple) -> GridTriple:
    """(M A N^-1, N B P^-1, P C M^-1)."""
    m_inv, n_inv, p_inv = _invertible(m), _invertible(n), _invertible(p)
    return GridTriple(m.mul(t.a).mul(n_inv), n.mul(t.b).mul(p_inv), p.mul(t.c).mul(m_inv))


def random_sl3(ctx: FieldContext, rng: random.Random) -> MatrixK:
    """Random invertible matrix with its first row rescaled to det 1."""
    while True:
        rows = [[ctx.random(rng) for _ in range(3)] for _ in range(3)]
        d = determinant(MatrixK.from_rows(ctx, rows))
        if ctx.is_zero(d):
            continue
        inv = ctx.inv(d)
        rows[0] = [ctx.mul(inv, x) for x in rows[0]]
        return MatrixK.from_rows(ctx, rows)


# ---------- Theta and the singular locus ----------


def theta_map(t: GridTriple) -> HermitianMatrix:
    return theta_raw(t.context, t.values())


def theta_inverse(a: HermitianMatrix) -> GridTriple:
    return GridTriple.from_values(a.context, theta_inverse_raw(a))


def singular_locus_check(t: GridTriple) -> Dict[str, Any]:
    """grad beta = 0  <=>  Theta(t) on the minor quadrics  <=>  Theta(t) zero or rank one."""
    gradient_zero = all(g.is_zero() for g in beta_gradient(t))
    image = theta_map(t)
    quadrics = on_quadrics(image)
    rank_le_one = image.is_zero() or jordan_rank_one(image)
    return bullet_report(
        {
            "gradient_vs_quadrics": gradient_zero == quadrics,
            "quadrics_vs_rank_one": quadrics == rank_le_one,
        },
        gradient_zero=gradient_zero,
        on_quadrics=quadrics,
        rank_at_most_one=rank_le_one,
    )
