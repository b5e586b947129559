# compalg_kit/foundation/linalg.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from compalg_kit.errors import FieldError, ShapeError
from compalg_kit.foundation.fields import FieldContext, Raw, Scalar

Row = Tuple[Raw, ...]


# ---------- Row reduction kernel ----------


def rref_rows(
    ctx: FieldContext, rows: Iterable[Sequence[Raw]], ncols: int
) -> Tuple[List[List[Raw]], List[int]]:
    """
    Reduced row-echelon form of `rows`.

    Returns (nonzero echelon rows, pivot columns). Pivots are 1 and are the
    only nonzero entries of their column, so the result is canonical.
    """
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    fp = ctx.kind == "fp"
    p = ctx.characteristic
    for c in range(ncols):
        if r == len(m):
            break
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            inv = ctx.inv(lead)
            if fp:
                m[r] = [(inv * x) % p for x in m[r]]
            else:
                m[r] = [inv * x for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i == r:
                continue
            f = m[i][c]
            if f == 0:
                continue
            if fp:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], prow)]
            else:
                m[i] = [x - f * y for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_rows(ctx: FieldContext, rows: Iterable[Sequence[Raw]], ncols: int) -> int:
    return len(rref_rows(ctx, rows, ncols)[1])


def kernel_rows(
    ctx: FieldContext, rows: Sequence[Sequence[Raw]], ncols: int
) -> List[List[Raw]]:
    """Basis of {x : rows·x = 0}, one vector per free column."""
    echelon, pivots = rref_rows(ctx, rows, ncols)
    pivot_set = set(pivots)
    basis: List[List[Raw]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ctx.zero()] * ncols
        v[free] = ctx.one()
        for row, pc in zip(echelon, pivots):
            v[pc] = ctx.neg(row[free])
        basis.append(v)
    return basis


# ---------- Vector helpers ----------


def vec_add(ctx: FieldContext, u: Sequence[Raw], v: Sequence[Raw]) -> Row:
    return tuple(ctx.add(a, b) for a, b in zip(u, v))


def vec_sub(ctx: FieldContext, u: Sequence[Raw], v: Sequence[Raw]) -> Row:
    return tuple(ctx.sub(a, b) for a, b in zip(u, v))


def vec_scale(ctx: FieldContext, c: Raw, v: Sequence[Raw]) -> Row:
    return tuple(ctx.mul(c, a) for a in v)


def is_zero_vector(v: Sequence[Raw]) -> bool:
    return all(a == 0 for a in v)


def mat_vec(ctx: FieldContext, rows: Sequence[Sequence[Raw]], v: Sequence[Raw]) -> Row:
    out = []
    for row in rows:
        acc = ctx.zero()
        for a, b in zip(row, v):
            if a != 0 and b != 0:
                acc = ctx.add(acc, ctx.mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul_rows(
    ctx: FieldContext, a: Sequence[Sequence[Raw]], b: Sequence[Sequence[Raw]]
) -> List[Row]:
    cols = list(zip(*b)) if b else []
    return [tuple(_dot(ctx, row, col) for col in cols) for row in a]


def _dot(ctx: FieldContext, u: Sequence[Raw], v: Sequence[Raw]) -> Raw:
    acc = ctx.zero()
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = ctx.add(acc, ctx.mul(a, b))
    return acc


# ---------- MatrixK ----------


@dataclass(frozen=True)
class MatrixK:
    """A dense matrix over a FieldContext; all entries share the context."""

    context: FieldContext
    rows: Tuple[Row, ...]
    ncols: int

    @classmethod
    def from_rows(
        cls, ctx: FieldContext, rows: Sequence[Sequence[object]], ncols: Optional[int] = None
    ) -> "MatrixK":
        coerced = tuple(tuple(ctx.coerce(x) for x in row) for row in rows)
        width = ncols if ncols is not None else (len(coerced[0]) if coerced else 0)
        for row in coerced:
            if len(row) != width:
                raise ShapeError(f"ragged matrix: expected {width} columns, got {len(row)}")
        return cls(ctx, coerced, width)

    @classmethod
    def zeros(cls, ctx: FieldContext, nrows: int, ncols: int) -> "MatrixK":
        return cls(ctx, tuple((ctx.zero(),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "MatrixK":
        rows = tuple(
            tuple(ctx.one() if i == j else ctx.zero() for j in range(n)) for i in range(n)
        )
        return cls(ctx, rows, n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.context, self.rows[i][j])

    def columns(self) -> List[Row]:
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    def transpose(self) -> "MatrixK":
        return MatrixK(self.context, tuple(self.columns()), self.nrows)

    def _same_context(self, other: "MatrixK") -> None:
        if other.context != self.context:
            raise FieldError("matrix context mismatch")

    def mul(self, other: "MatrixK") -> "MatrixK":
        self._same_context(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return MatrixK(
            self.context,
            tuple(mat_mul_rows(self.context, self.rows, other.rows)),
            other.ncols,
        )

    def add(self, other: "MatrixK") -> "MatrixK":
        self._same_context(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        rows = tuple(vec_add(self.context, a, b) for a, b in zip(self.rows, other.rows))
        return MatrixK(self.context, rows, self.ncols)

    def sub(self, other: "MatrixK") -> "MatrixK":
        return self.add(other.scale(self.context.from_int(-1)))

    def scale(self, c: Raw) -> "MatrixK":
        rows = tuple(vec_scale(self.context, c, row) for row in self.rows)
        return MatrixK(self.context, rows, self.ncols)

    def apply(self, v: Sequence[Raw]) -> Row:
        if len(v) != self.ncols:
            raise ShapeError(f"vector of length {len(v)} against {self.ncols} columns")
        return mat_vec(self.context, self.rows, v)

    def rank(self) -> int:
        return rank_rows(self.context, self.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols


def rref(m: MatrixK) -> Tuple[MatrixK, int]:
    """Canonical reduced row-echelon form (zero rows kept at the bottom) and rank."""
    echelon, pivots = rref_rows(m.context, m.rows, m.ncols)
    padded = [tuple(r) for r in echelon]
    padded += [(m.context.zero(),) * m.ncols] * (m.nrows - len(echelon))
    return MatrixK(m.context, tuple(padded), m.ncols), len(pivots)


def determinant(m: MatrixK) -> Raw:
    if not m.is_square():
        raise ShapeError("determinant of a non-square matrix")
    ctx = m.context
    a = [list(r) for r in m.rows]
    n = m.nrows
    det = ctx.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return ctx.zero()
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = ctx.neg(det)
        det = ctx.mul(det, a[c][c])
        inv = ctx.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = ctx.mul(a[i][c], inv)
                a[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[i], a[c])]
    return det


def inverse(m: MatrixK) -> MatrixK:
    if not m.is_square():
        raise ShapeError("inverse of a non-square matrix")
    ctx = m.context
    n = m.nrows
    ident = MatrixK.identity(ctx, n).rows
    augmented = [list(r) + list(e) for r, e in zip(m.rows, ident)]
    echelon, pivots = rref_rows(ctx, augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(echelon) < n:
        raise FieldError("matrix is singular")
    return MatrixK(ctx, tuple(tuple(row[n:]) for row in echelon[:n]), n)


def solve(m: MatrixK, b: Sequence[Raw]) -> Optional[Row]:
    """One exact solution of m·x = b, or None when the system is inconsistent."""
    if len(b) != m.nrows:
        raise ShapeError("right-hand side length does not match rows")
    ctx = m.context
    augmented = [list(r) + [bi] for r, bi in zip(m.rows, b)]
    echelon, pivots = rref_rows(ctx, augmented, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [ctx.zero()] * m.ncols
    for row, pc in zip(echelon, pivots):
        x[pc] = row[-1]
    return tuple(x)


# ---------- SubspaceK ----------


@dataclass(frozen=True)
class SubspaceK:
    """
    A subspace of K^ambient_dim stored as its reduced row-echelon basis.

    Echelon form is canonical, so dataclass equality is subspace equality.
    """

    context: FieldContext
    ambient_dim: int
    basis: Tuple[Row, ...]

    @classmethod
    def span(
        cls, ctx: FieldContext, vectors: Iterable[Sequence[Raw]], ambient_dim: int
    ) -> "SubspaceK":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ShapeError(f"vector of length {len(v)} in K^{ambient_dim}")
        echelon, _ = rref_rows(ctx, vecs, ambient_dim)
        return cls(ctx, ambient_dim, tuple(tuple(r) for r in echelon))

    @classmethod
    def zero(cls, ctx: FieldContext, ambient_dim: int) -> "SubspaceK":
        return cls(ctx, ambient_dim, ())

    @classmethod
    def full(cls, ctx: FieldContext, ambient_dim: int) -> "SubspaceK":
        return cls(ctx, ambient_dim, MatrixK.identity(ctx, ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        out = []
        for row in self.basis:
            out.append(next(i for i, x in enumerate(row) if x != 0))
        return tuple(out)

    def key(self) -> Tuple[Row, ...]:
        return self.basis

    def as_matrix(self) -> MatrixK:
        return MatrixK(self.context, self.basis, self.ambient_dim)

    def _compatible(self, other: "SubspaceK") -> None:
        if other.context != self.context:
            raise FieldError("subspace context mismatch")
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError(
                f"ambient mismatch: K^{self.ambient_dim} vs K^{other.ambient_dim}"
            )

    def reduce(self, v: Sequence[Raw]) -> Row:
        """Canonical coset representative of v modulo this subspace."""
        ctx = self.context
        out = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = out[pc]
            if f != 0:
                out = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(out, row)]
        return tuple(out)

    def contains_vector(self, v: Sequence[Raw]) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError(f"vector of length {len(v)} in K^{self.ambient_dim}")
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v: Sequence[Raw]) -> Row:
        """Coefficients of v in the echelon basis; ShapeError if v is outside."""
        if not self.contains_vector(v):
            raise ShapeError("vector does not lie in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def sum(self, other: "SubspaceK") -> "SubspaceK":
        self._compatible(other)
        return SubspaceK.span(self.context, self.basis + other.basis, self.ambient_dim)

    def intersect(self, other: "SubspaceK") -> "SubspaceK":
        self._compatible(other)
        ctx = self.context
        if self.dim == 0 or other.dim == 0:
            return SubspaceK.zero(ctx, self.ambient_dim)
        # columns u_1..u_k, v_1..v_l; kernel vectors (alpha, beta) give sum alpha_i u_i
        generators = list(self.basis) + list(other.basis)
        system = [tuple(g[i] for g in generators) for i in range(self.ambient_dim)]
        k = self.dim
        vectors = []
        for combo in kernel_rows(ctx, system, len(generators)):
            acc = (ctx.zero(),) * self.ambient_dim
            for coef, u in zip(combo[:k], self.basis):
                if coef != 0:
                    acc = vec_add(ctx, acc, vec_scale(ctx, coef, u))
            vectors.append(acc)
        return SubspaceK.span(ctx, vectors, self.ambient_dim)

    def contains(self, other: "SubspaceK") -> bool:
        self._compatible(other)
        return all(self.contains_vector(v) for v in other.basis)

    def image_under(self, m: MatrixK) -> "SubspaceK":
        if m.ncols != self.ambient_dim:
            raise ShapeError("map does not start at this ambient space")
        return SubspaceK.span(self.context, (m.apply(v) for v in self.basis), m.nrows)


def kernel_image(m: MatrixK) -> Tuple[SubspaceK, SubspaceK]:
    """Kernel in K^cols and image (column space) in K^rows; dims add up to cols."""
    ctx = m.context
    kernel = SubspaceK.span(ctx, kernel_rows(ctx, m.rows, m.ncols), m.ncols)
    image = SubspaceK.span(ctx, m.columns(), m.nrows)
    return kernel, image


def subspace_ops(u: SubspaceK, v: SubspaceK, op: str) -> "SubspaceK | bool":
    """sum | intersect | contains | equal."""
    if op == "sum":
        return u.sum(v)
    if op == "intersect":
        return u.intersect(v)
    if op == "contains":
        return u.contains(v)
    if op == "equal":
        u._compatible(v)
        return u == v
    raise ShapeError(f"unknown subspace operation: {op!r}")


def proportional_factor(ctx: FieldContext, u: Sequence[Raw], v: Sequence[Raw]) -> Optional[Raw]:
    """c with u = c·v, or None; v must be nonzero."""
    pivot = next((i for i, x in enumerate(v) if not ctx.is_zero(x)), None)
    if pivot is None:
        raise ShapeError("proportionality against the zero vector")
    c = ctx.div(u[pivot], v[pivot])
    if all(a == ctx.mul(c, b) for a, b in zip(u, v)):
        return c
    return None
