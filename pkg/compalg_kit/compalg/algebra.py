# compalg_kit/compalg/algebra.py

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, List, Sequence, Tuple

from compalg_kit.errors import CodecError, FieldError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import CompElementPayload, field_header
from compalg_kit.foundation.fields import FieldContext, Ring, Scalar
from compalg_kit.foundation.linalg import MatrixK

Coords = Tuple[Any, ...]

DIMENSIONS = {"R": 1, "C": 2, "H": 4, "O": 8}

# Coordinates, fixed repo-wide:
#   R: (l,)               for l*Id
#   C: (a, d)             for diag(a, d)
#   H: (m11, m12, m21, m22)
#   O: A-coords then B-coords of the Cayley pair (A, B)


# ---------- 2x2 blocks ----------


def _m_mul(r: Ring, x: Sequence[Any], y: Sequence[Any]) -> Coords:
    a, b, c, d = x
    e, f, g, h = y
    return (
        r.add(r.mul(a, e), r.mul(b, g)),
        r.add(r.mul(a, f), r.mul(b, h)),
        r.add(r.mul(c, e), r.mul(d, g)),
        r.add(r.mul(c, f), r.mul(d, h)),
    )


def _m_bar(r: Ring, x: Sequence[Any]) -> Coords:
    a, b, c, d = x
    return (d, r.neg(b), r.neg(c), a)


def _m_det(r: Ring, x: Sequence[Any]) -> Any:
    a, b, c, d = x
    return r.sub(r.mul(a, d), r.mul(b, c))


def _m_pair(r: Ring, x: Sequence[Any], y: Sequence[Any]) -> Any:
    # polarization of det: tr(x * bar(y))
    return r.sub(
        r.add(r.mul(x[0], y[3]), r.mul(x[3], y[0])),
        r.add(r.mul(x[1], y[2]), r.mul(x[2], y[1])),
    )


def _m_add(r: Ring, x: Sequence[Any], y: Sequence[Any]) -> Coords:
    return tuple(r.add(a, b) for a, b in zip(x, y))


def _m_sub(r: Ring, x: Sequence[Any], y: Sequence[Any]) -> Coords:
    return tuple(r.sub(a, b) for a, b in zip(x, y))


# ---------- AlgebraTag ----------


@dataclass(frozen=True)
class AlgebraTag:
    """
    One of the four split composition algebras over a ring.

    All arithmetic acts on coordinate tuples; the ring is a FieldContext for
    numeric work or a PolynomialRing for symbolic expansion.
    """

    kind: str
    context: Any

    def __post_init__(self) -> None:
        if self.kind not in DIMENSIONS:
            raise ShapeError(f"unknown algebra kind: {self.kind!r}")

    @property
    def dim(self) -> int:
        return DIMENSIONS[self.kind]

    @property
    def is_associative(self) -> bool:
        return self.kind != "O"

    @property
    def name(self) -> str:
        return self.kind.lower()

    # ---------- Constants ----------

    def zero(self) -> Coords:
        return (self.context.zero(),) * self.dim

    def one(self) -> Coords:
        return self.scalar(self.context.one())

    def scalar(self, c: Any) -> Coords:
        z = self.context.zero()
        if self.kind == "R":
            return (c,)
        if self.kind == "C":
            return (c, c)
        if self.kind == "H":
            return (c, z, z, c)
        return (c, z, z, c, z, z, z, z)

    def basis(self) -> List[Coords]:
        r = self.context
        return [
            tuple(r.one() if i == j else r.zero() for i in range(self.dim))
            for j in range(self.dim)
        ]

    def from_ints(self, values: Sequence[int]) -> Coords:
        if len(values) != self.dim:
            raise ShapeError(f"{self.kind} needs {self.dim} coordinates, got {len(values)}")
        return tuple(self.context.from_int(v) for v in values)

    # ---------- Linear structure ----------

    def add(self, x: Coords, y: Coords) -> Coords:
        r = self.context
        return tuple(r.add(a, b) for a, b in zip(x, y))

    def sub(self, x: Coords, y: Coords) -> Coords:
        r = self.context
        return tuple(r.sub(a, b) for a, b in zip(x, y))

    def neg(self, x: Coords) -> Coords:
        r = self.context
        return tuple(r.neg(a) for a in x)

    def scale(self, c: Any, x: Coords) -> Coords:
        r = self.context
        return tuple(r.mul(c, a) for a in x)

    def is_zero(self, x: Coords) -> bool:
        return all(self.context.is_zero(a) for a in x)

    # ---------- Multiplicative structure ----------

    def mul(self, x: Coords, y: Coords) -> Coords:
        r = self.context
        if self.kind == "R":
            return (r.mul(x[0], y[0]),)
        if self.kind == "C":
            return (r.mul(x[0], y[0]), r.mul(x[1], y[1]))
        if self.kind == "H":
            return _m_mul(r, x, y)
        a, b = x[:4], x[4:]
        c, d = y[:4], y[4:]
        # (A,B)*(C,D) = (AC - bar(D) B, B bar(C) + D A)
        first = _m_sub(r, _m_mul(r, a, c), _m_mul(r, _m_bar(r, d), b))
        second = _m_add(r, _m_mul(r, b, _m_bar(r, c)), _m_mul(r, d, a))
        return first + second

    def conj(self, x: Coords) -> Coords:
        r = self.context
        if self.kind == "R":
            return x
        if self.kind == "C":
            return (x[1], x[0])
        if self.kind == "H":
            return _m_bar(r, x)
        return _m_bar(r, x[:4]) + tuple(r.neg(b) for b in x[4:])

    def norm(self, x: Coords) -> Any:
        r = self.context
        if self.kind == "R":
            return r.mul(x[0], x[0])
        if self.kind == "C":
            return r.mul(x[0], x[1])
        if self.kind == "H":
            return _m_det(r, x)
        return r.add(_m_det(r, x[:4]), _m_det(r, x[4:]))

    def bilinear(self, x: Coords, y: Coords) -> Any:
        """Polarization Q(x+y) - Q(x) - Q(y), written out to avoid the subtraction."""
        r = self.context
        if self.kind == "R":
            return r.mul(r.from_int(2), r.mul(x[0], y[0]))
        if self.kind == "C":
            return r.add(r.mul(x[0], y[1]), r.mul(x[1], y[0]))
        if self.kind == "H":
            return _m_pair(r, x, y)
        return r.add(_m_pair(r, x[:4], y[:4]), _m_pair(r, x[4:], y[4:]))

    def re(self, x: Coords) -> Any:
        return self.bilinear(x, self.one())

    def associator(self, x: Coords, y: Coords, z: Coords) -> Coords:
        return self.sub(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    def inverse(self, x: Coords) -> Coords:
        q = self.norm(x)
        if self.context.is_zero(q):
            raise PreconditionError("element is a zero divisor (Q(x) = 0)")
        return self.scale(self.context.inv(q), self.conj(x))

    # ---------- Operators ----------

    def operator_rows(self, z: Coords, side: str) -> List[Coords]:
        """Rows of the d x d matrix of L_z or R_z; column j is the image of e_j."""
        if side == "left":
            columns = [self.mul(z, b) for b in self.basis()]
        elif side == "right":
            columns = [self.mul(b, z) for b in self.basis()]
        else:
            raise ShapeError(f"side must be left or right, got {side!r}")
        return [tuple(col[i] for col in columns) for i in range(self.dim)]


# ---------- Element wrapper ----------


@dataclass(frozen=True)
class CompElement:
    """An element of a split composition algebra, by fixed-basis coordinates."""

    tag: AlgebraTag
    coords: Coords

    def __post_init__(self) -> None:
        if len(self.coords) != self.tag.dim:
            raise ShapeError(
                f"{self.tag.kind} element needs {self.tag.dim} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def of(cls, tag: AlgebraTag, values: Sequence[Any]) -> "CompElement":
        return cls(tag, tuple(tag.context.coerce(v) for v in values))

    def coordinates(self) -> Coords:
        return self.coords

    def payload(self) -> Tuple[MatrixK, ...]:
        """The matrix model: one 2x2 matrix, or a Cayley pair for O."""
        ctx = self.tag.context
        z = ctx.zero()
        c = self.coords
        if self.tag.kind == "R":
            blocks = [(c[0], z, z, c[0])]
        elif self.tag.kind == "C":
            blocks = [(c[0], z, z, c[1])]
        elif self.tag.kind == "H":
            blocks = [c]
        else:
            blocks = [c[:4], c[4:]]
        return tuple(MatrixK(ctx, ((b[0], b[1]), (b[2], b[3])), 2) for b in blocks)

    def _same(self, other: "CompElement") -> None:
        if other.tag != self.tag:
            raise ShapeError(f"algebra mismatch: {self.tag.kind} vs {other.tag.kind}")

    def __mul__(self, other: "CompElement") -> "CompElement":
        self._same(other)
        return CompElement(self.tag, self.tag.mul(self.coords, other.coords))

    def __add__(self, other: "CompElement") -> "CompElement":
        self._same(other)
        return CompElement(self.tag, self.tag.add(self.coords, other.coords))

    def __sub__(self, other: "CompElement") -> "CompElement":
        self._same(other)
        return CompElement(self.tag, self.tag.sub(self.coords, other.coords))

    def __neg__(self) -> "CompElement":
        return CompElement(self.tag, self.tag.neg(self.coords))

    def is_zero(self) -> bool:
        return self.tag.is_zero(self.coords)


# ---------- Public operations ----------


def mul(x: CompElement, y: CompElement) -> CompElement:
    return x * y


def conj(x: CompElement) -> CompElement:
    return CompElement(x.tag, x.tag.conj(x.coords))


def norm_q(x: CompElement) -> Scalar:
    return Scalar(x.tag.context, x.tag.norm(x.coords))


def bilinear(x: CompElement, y: CompElement) -> Scalar:
    x._same(y)
    return Scalar(x.tag.context, x.tag.bilinear(x.coords, y.coords))


def re(x: CompElement) -> Scalar:
    return Scalar(x.tag.context, x.tag.re(x.coords))


def inverse(x: CompElement) -> CompElement:
    return CompElement(x.tag, x.tag.inverse(x.coords))


def associator(x: CompElement, y: CompElement, z: CompElement) -> CompElement:
    x._same(y)
    x._same(z)
    return CompElement(x.tag, x.tag.associator(x.coords, y.coords, z.coords))


def mul_operator(z: CompElement, side: str) -> MatrixK:
    """Matrix of L_z (side="left") or R_z (side="right") in the fixed basis."""
    rows = z.tag.operator_rows(z.coords, side)
    return MatrixK(z.tag.context, tuple(rows), z.tag.dim)


# ---------- Named elements ----------


@lru_cache(maxsize=None)
def algebra(kind: str, context: FieldContext) -> AlgebraTag:
    return AlgebraTag(kind, context)


def unit_e(tag: AlgebraTag) -> Coords:
    """e = E11 (C and H)."""
    if tag.kind == "C":
        return tag.from_ints((1, 0))
    if tag.kind == "H":
        return tag.from_ints((1, 0, 0, 0))
    raise PreconditionError("e is defined for C and H")


def unit_f(tag: AlgebraTag) -> Coords:
    """f = E22 (C and H)."""
    if tag.kind == "C":
        return tag.from_ints((0, 1))
    if tag.kind == "H":
        return tag.from_ints((0, 0, 0, 1))
    raise PreconditionError("f is defined for C and H")


def unit_h(tag: AlgebraTag) -> Coords:
    """h = E12 + E21 (H)."""
    if tag.kind != "H":
        raise PreconditionError("h is defined for H")
    return tag.from_ints((0, 1, 1, 0))


def x0(tag: AlgebraTag) -> Coords:
    """The base isotropic octonion (E11, 0)."""
    if tag.kind != "O":
        raise PreconditionError("x0 is an octonion")
    return tag.from_ints((1, 0, 0, 0, 0, 0, 0, 0))


# ---------- Sampling / enumeration ----------


def random_element(tag: AlgebraTag, rng: random.Random) -> Coords:
    return tuple(tag.context.random(rng) for _ in range(tag.dim))


def random_nonzero(tag: AlgebraTag, rng: random.Random) -> Coords:
    while True:
        x = random_element(tag, rng)
        if not tag.is_zero(x):
            return x


def random_invertible(tag: AlgebraTag, rng: random.Random) -> Coords:
    while True:
        x = random_element(tag, rng)
        if not tag.context.is_zero(tag.norm(x)):
            return x


def _isotropic_block(ctx: FieldContext, rng: random.Random, target: Any) -> Coords:
    # a 2x2 block with det = target: pick a != 0, b, c, then d = (target + bc)/a
    a = ctx.random_nonzero(rng)
    b = ctx.random(rng)
    c = ctx.random(rng)
    d = ctx.div(ctx.add(target, ctx.mul(b, c)), a)
    coords = [a, b, c, d]
    # move the forced entry around so every block shape is reachable
    if rng.random() < 0.5:
        coords = [coords[3], coords[2], coords[1], coords[0]]
    return tuple(coords)


def _rank_one_block(ctx: FieldContext, rng: random.Random) -> Coords:
    # u v^T covers every rank-one 2x2 matrix
    u = (ctx.random(rng), ctx.random(rng))
    v = (ctx.random(rng), ctx.random(rng))
    return (
        ctx.mul(u[0], v[0]),
        ctx.mul(u[0], v[1]),
        ctx.mul(u[1], v[0]),
        ctx.mul(u[1], v[1]),
    )


def random_isotropic(tag: AlgebraTag, rng: random.Random) -> Coords:
    """A nonzero element with Q = 0 (none exist in R)."""
    ctx = tag.context
    if tag.kind == "R":
        raise PreconditionError("R has no nonzero isotropic element")
    while True:
        if tag.kind == "C":
            v = ctx.random_nonzero(rng)
            x: Coords = (v, ctx.zero()) if rng.random() < 0.5 else (ctx.zero(), v)
        elif tag.kind == "H":
            x = _rank_one_block(ctx, rng)
        else:
            first = random_element(AlgebraTag("H", ctx), rng)
            target = ctx.neg(_m_det(ctx, first))
            if ctx.is_zero(target):
                second = _rank_one_block(ctx, rng)
            else:
                second = _isotropic_block(ctx, rng, target)
            x = first + second
            if rng.random() < 0.5:
                x = x[4:] + x[:4]
        if not tag.is_zero(x) and ctx.is_zero(tag.norm(x)):
            return x


def enumerate_elements(tag: AlgebraTag) -> Iterator[Coords]:
    """All elements over a finite field, in lexicographic coordinate order."""
    ctx = tag.context
    if not isinstance(ctx, FieldContext) or not ctx.is_finite:
        raise FieldError("enumeration needs a finite field")
    return itertools.product(range(ctx.order), repeat=tag.dim)


def isotropic_elements(tag: AlgebraTag) -> List[Coords]:
    """Nonzero isotropic elements over a finite field."""
    return [
        x
        for x in enumerate_elements(tag)
        if not tag.is_zero(x) and tag.context.is_zero(tag.norm(x))
    ]


# ---------- JSON ----------


def element_to_payload(x: CompElement) -> CompElementPayload:
    ctx = x.tag.context
    return CompElementPayload(
        **field_header(ctx), alg=x.tag.name, coords=[ctx.to_json(a) for a in x.coords]
    )


def element_from_payload(payload: CompElementPayload) -> CompElement:
    tag = algebra(payload.alg.upper(), payload.context())
    coords = payload.decode(payload.coords)
    if len(coords) != tag.dim:
        raise CodecError(f"{tag.kind} element needs {tag.dim} coordinates, got {len(coords)}")
    return CompElement(tag, coords)
