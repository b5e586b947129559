# compalg_kit/jordan/hermitian.py

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, List, Sequence, Tuple

from compalg_kit.compalg.algebra import AlgebraTag, Coords, algebra
from compalg_kit.errors import CodecError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import HermitianPayload, field_header
from compalg_kit.foundation.fields import Scalar

Grid = List[List[Coords]]


def pairs(n: int) -> List[Tuple[int, int]]:
    """Upper positions (i, j), i < j, lexicographic; this is the storage order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def coordinate_dim(n: int, tag: AlgebraTag) -> int:
    return n + len(pairs(n)) * tag.dim


@dataclass(frozen=True)
class HermitianMatrix:
    """
    An element of H_n(A).

    The diagonal holds base-ring scalars; `upper` holds the entries above the
    diagonal in `pairs(n)` order. Entries below are conjugates.
    """

    n: int
    tag: AlgebraTag
    diag: Tuple[Any, ...]
    upper: Tuple[Coords, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ShapeError("n must be positive")
        if self.tag.kind == "O" and self.n > 3:
            raise ShapeError("H_n(O) is only supported for n <= 3")
        if len(self.diag) != self.n:
            raise ShapeError(f"diag needs {self.n} entries")
        if len(self.upper) != len(pairs(self.n)):
            raise ShapeError(f"upper needs {len(pairs(self.n))} entries")
        for x in self.upper:
            if len(x) != self.tag.dim:
                raise ShapeError(f"upper entries need {self.tag.dim} coordinates")

    # ---------- Constructors ----------

    @classmethod
    def zero(cls, n: int, tag: AlgebraTag) -> "HermitianMatrix":
        ring = tag.context
        return cls(n, tag, (ring.zero(),) * n, (tag.zero(),) * len(pairs(n)))

    @classmethod
    def identity(cls, n: int, tag: AlgebraTag) -> "HermitianMatrix":
        ring = tag.context
        return cls(n, tag, (ring.one(),) * n, (tag.zero(),) * len(pairs(n)))

    @classmethod
    def elementary(cls, n: int, tag: AlgebraTag, i: int) -> "HermitianMatrix":
        """E_ii."""
        ring = tag.context
        diag = tuple(ring.one() if k == i else ring.zero() for k in range(n))
        return cls(n, tag, diag, (tag.zero(),) * len(pairs(n)))

    @classmethod
    def off_diagonal(cls, n: int, tag: AlgebraTag, i: int, j: int, x: Coords) -> "HermitianMatrix":
        """x at (i, j) and conj(x) at (j, i)."""
        if i == j:
            raise ShapeError("off_diagonal needs i != j")
        if i > j:
            i, j, x = j, i, tag.conj(x)
        zero = cls.zero(n, tag)
        upper = tuple(x if p == (i, j) else tag.zero() for p in pairs(n))
        return cls(n, tag, zero.diag, upper)

    @classmethod
    def diagonal(cls, tag: AlgebraTag, values: Sequence[Any]) -> "HermitianMatrix":
        n = len(values)
        return cls(n, tag, tuple(values), (tag.zero(),) * len(pairs(n)))

    @classmethod
    def from_upper(
        cls, n: int, tag: AlgebraTag, diag: Sequence[Any], entries: dict
    ) -> "HermitianMatrix":
        """Build from {(i, j): coords} with i < j; missing entries are zero."""
        upper = tuple(entries.get(p, tag.zero()) for p in pairs(n))
        return cls(n, tag, tuple(diag), upper)

    @classmethod
    def from_coordinates(cls, n: int, tag: AlgebraTag, coords: Sequence[Any]) -> "HermitianMatrix":
        if len(coords) != coordinate_dim(n, tag):
            raise ShapeError(f"H_{n}({tag.kind}) needs {coordinate_dim(n, tag)} coordinates")
        d = tag.dim
        upper = tuple(
            tuple(coords[n + k * d : n + (k + 1) * d]) for k in range(len(pairs(n)))
        )
        return cls(n, tag, tuple(coords[:n]), upper)

    @classmethod
    def from_grid(cls, n: int, tag: AlgebraTag, grid: Grid) -> "HermitianMatrix":
        """From a full n x n grid of algebra elements; ShapeError unless Hermitian."""
        diag = []
        for i in range(n):
            x = grid[i][i]
            if x != tag.scalar(x[0]):
                raise ShapeError(f"diagonal entry ({i},{i}) is not a scalar")
            diag.append(x[0])
        upper = []
        for i, j in pairs(n):
            if grid[j][i] != tag.conj(grid[i][j]):
                raise ShapeError(f"entries ({i},{j}) and ({j},{i}) are not conjugate")
            upper.append(grid[i][j])
        return cls(n, tag, tuple(diag), tuple(upper))

    # ---------- Access ----------

    def entry(self, i: int, j: int) -> Coords:
        if i == j:
            return self.tag.scalar(self.diag[i])
        if i < j:
            return self.upper[pairs(self.n).index((i, j))]
        return self.tag.conj(self.upper[pairs(self.n).index((j, i))])

    def grid(self) -> Grid:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def coordinates(self) -> Tuple[Any, ...]:
        out: List[Any] = list(self.diag)
        for x in self.upper:
            out.extend(x)
        return tuple(out)

    @property
    def context(self) -> Any:
        return self.tag.context

    # ---------- Linear structure ----------

    def _same(self, other: "HermitianMatrix") -> None:
        if other.n != self.n or other.tag != self.tag:
            raise ShapeError(
                f"H_{self.n}({self.tag.kind}) vs H_{other.n}({other.tag.kind})"
            )

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._same(other)
        ring = self.context
        return HermitianMatrix(
            self.n,
            self.tag,
            tuple(ring.add(a, b) for a, b in zip(self.diag, other.diag)),
            tuple(self.tag.add(x, y) for x, y in zip(self.upper, other.upper)),
        )

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._same(other)
        ring = self.context
        return HermitianMatrix(
            self.n,
            self.tag,
            tuple(ring.sub(a, b) for a, b in zip(self.diag, other.diag)),
            tuple(self.tag.sub(x, y) for x, y in zip(self.upper, other.upper)),
        )

    def scale(self, c: Any) -> "HermitianMatrix":
        ring = self.context
        return HermitianMatrix(
            self.n,
            self.tag,
            tuple(ring.mul(c, a) for a in self.diag),
            tuple(self.tag.scale(c, x) for x in self.upper),
        )

    def is_zero(self) -> bool:
        ring = self.context
        return all(ring.is_zero(a) for a in self.diag) and all(
            self.tag.is_zero(x) for x in self.upper
        )


def standard_basis(n: int, tag: AlgebraTag) -> List[HermitianMatrix]:
    """Unit coordinate vectors in coordinates() order."""
    ring = tag.context
    size = coordinate_dim(n, tag)
    return [
        HermitianMatrix.from_coordinates(
            n, tag, [ring.one() if k == m else ring.zero() for k in range(size)]
        )
        for m in range(size)
    ]


def enumerate_hermitian(n: int, tag: AlgebraTag) -> Iterator[HermitianMatrix]:
    """Every element of H_n(A) over a finite field, zero first."""
    ring = tag.context
    if not ring.is_finite:
        raise PreconditionError("enumeration needs a finite field")
    for coords in itertools.product(range(ring.order), repeat=coordinate_dim(n, tag)):
        yield HermitianMatrix.from_coordinates(n, tag, coords)


# ---------- Trace form ----------


def trace_form_raw(a: HermitianMatrix, b: HermitianMatrix) -> Any:
    a._same(b)
    ring = a.context
    acc = ring.zero()
    for x, y in zip(a.diag, b.diag):
        acc = ring.add(acc, ring.mul(x, y))
    for x, y in zip(a.upper, b.upper):
        acc = ring.add(acc, a.tag.bilinear(x, y))
    return acc


def trace_form(a: HermitianMatrix, b: HermitianMatrix) -> Scalar:
    """T(A, B) = sum of diag products + sum over i<j of <A_ij, B_ij>."""
    return Scalar(a.context, trace_form_raw(a, b))


def tr(a: HermitianMatrix) -> Scalar:
    ring = a.context
    acc = ring.zero()
    for x in a.diag:
        acc = ring.add(acc, x)
    return Scalar(ring, acc)


# ---------- Associative products ----------


def grid_product(tag: AlgebraTag, x: Grid, y: Grid) -> Grid:
    n = len(x)
    out: Grid = []
    for i in range(n):
        row = []
        for k in range(n):
            acc = tag.zero()
            for j in range(n):
                acc = tag.add(acc, tag.mul(x[i][j], y[j][k]))
            row.append(acc)
        out.append(row)
    return out


def embed_quaternion(a: HermitianMatrix, octonions: AlgebraTag) -> HermitianMatrix:
    """H_n(H) -> H_n(O), x -> (x, 0)."""
    if a.tag.kind != "H" or octonions.kind != "O":
        raise PreconditionError("embedding goes from H_n(H) to H_n(O)")
    zero = (octonions.context.zero(),) * 4
    return HermitianMatrix(a.n, octonions, a.diag, tuple(tuple(x) + zero for x in a.upper))


# ---------- JSON ----------


def hermitian_to_payload(a: HermitianMatrix) -> HermitianPayload:
    ctx = a.context
    upper = [
        [i + 1, j + 1, *[ctx.to_json(v) for v in x]]
        for (i, j), x in zip(pairs(a.n), a.upper)
        if not a.tag.is_zero(x)
    ]
    return HermitianPayload(
        **field_header(ctx),
        n=a.n,
        alg=a.tag.name,
        diag=[ctx.to_json(v) for v in a.diag],
        upper=upper,
    )


def hermitian_from_payload(payload: HermitianPayload) -> HermitianMatrix:
    tag = algebra(payload.alg.upper(), payload.context())
    entries = {}
    for item in payload.upper:
        i, j = int(item[0]) - 1, int(item[1]) - 1
        coords = payload.decode(item[2:])
        if len(coords) != tag.dim:
            raise CodecError(f"entry ({i + 1},{j + 1}) needs {tag.dim} coordinates")
        if (i, j) in entries:
            raise CodecError(f"entry ({i + 1},{j + 1}) given twice")
        entries[(i, j)] = coords
    try:
        return HermitianMatrix.from_upper(payload.n, tag, payload.decode(payload.diag), entries)
    except ShapeError as exc:
        raise CodecError(str(exc)) from exc
