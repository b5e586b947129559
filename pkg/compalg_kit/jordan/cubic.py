# compalg_kit/jordan/cubic.py

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from compalg_kit.compalg.algebra import AlgebraTag
from compalg_kit.errors import PreconditionError, ShapeError
from compalg_kit.foundation.fields import Scalar
from compalg_kit.foundation.polynomial import POLY, Polynomial
from compalg_kit.jordan.hermitian import HermitianMatrix, coordinate_dim

# (coefficient, monomial) lists; monomials are tuples of coordinate indices
Terms = Tuple[Tuple[int, Tuple[int, ...]], ...]


def det3_raw(a: HermitianMatrix) -> Any:
    """
    r1 r2 r3 + <x1 x2, x3> - r1 Q(x1) - r2 Q(x2) - r3 Q(x3)

    with r = diag, x1 = a_23, x2 = a_31, x3 = a_21, so the middle term is
    T(a_12 a_23 a_31).
    """
    if a.n != 3:
        raise ShapeError("det3 needs n = 3")
    tag, ring = a.tag, a.context
    r1, r2, r3 = a.diag
    x1 = a.entry(1, 2)
    x2 = a.entry(2, 0)
    x3 = a.entry(1, 0)
    acc = ring.mul(ring.mul(r1, r2), r3)
    acc = ring.add(acc, tag.bilinear(tag.mul(x1, x2), x3))
    acc = ring.sub(acc, ring.mul(r1, tag.norm(x1)))
    acc = ring.sub(acc, ring.mul(r2, tag.norm(x2)))
    acc = ring.sub(acc, ring.mul(r3, tag.norm(x3)))
    return acc


def det3(a: HermitianMatrix) -> Scalar:
    return Scalar(a.context, det3_raw(a))


def _terms(p: Polynomial) -> Terms:
    return tuple((c, m) for m, c in p.items())  # type: ignore[misc]


def _evaluate(terms: Terms, values: Sequence[Any], ring: Any) -> Any:
    acc = ring.zero()
    for c, m in terms:
        term = ring.from_int(c)
        for v in m:
            term = ring.mul(term, values[v])
        acc = ring.add(acc, term)
    return acc


@dataclass(frozen=True)
class CubicData:
    """
    det3 on H_3(A) expanded once over the integers, with its gradient and
    second derivatives in the coordinates() basis.

    The adjoint is Gram^-1 * grad(det3), where Gram is the trace-form matrix;
    the cross product is the polarization of the adjoint, i.e. the Hessian
    applied to the second argument.
    """

    kind: str
    size: int
    det: Polynomial
    gradient: Tuple[Terms, ...]
    hessian: Tuple[Dict[int, Terms], ...]

    @classmethod
    def build(cls, kind: str) -> "CubicData":
        tag = AlgebraTag(kind, POLY)
        size = coordinate_dim(3, tag)
        symbols = [POLY.variable(k) for k in range(size)]
        det = det3_raw(HermitianMatrix.from_coordinates(3, tag, symbols))
        grads = [det.derivative(k) for k in range(size)]
        hessian: List[Dict[int, Terms]] = []
        for g in grads:
            row: Dict[int, Terms] = {}
            for col in sorted(g.variables()):
                row[col] = _terms(g.derivative(col))
            hessian.append(row)
        return cls(kind, size, det, tuple(_terms(g) for g in grads), tuple(hessian))

    def evaluate_det(self, values: Sequence[Any], ring: Any) -> Any:
        return _evaluate(_terms(self.det), values, ring)

    def evaluate_gradient(self, values: Sequence[Any], ring: Any) -> List[Any]:
        return [_evaluate(t, values, ring) for t in self.gradient]

    def hessian_apply(self, x: Sequence[Any], y: Sequence[Any], ring: Any) -> List[Any]:
        """sum_l d_m d_l det(x) * y_l for each m; the polarization of the gradient."""
        out = []
        for row in self.hessian:
            acc = ring.zero()
            for col, terms in row.items():
                if ring.is_zero(y[col]):
                    continue
                acc = ring.add(acc, ring.mul(_evaluate(terms, x, ring), y[col]))
            out.append(acc)
        return out

    def hessian_matrix(self, x: Sequence[Any], ring: Any) -> List[List[Any]]:
        rows = []
        for row in self.hessian:
            full = [ring.zero()] * self.size
            for col, terms in row.items():
                full[col] = _evaluate(terms, x, ring)
            rows.append(full)
        return rows


@lru_cache(maxsize=None)
def cubic_data(kind: str) -> CubicData:
    return CubicData.build(kind)


# ---------- Trace-form Gram matrix ----------


def gram_solve(tag: AlgebraTag, values: Sequence[Any]) -> Tuple[Any, ...]:
    """Solve Gram * v = values for the H_3(A) trace form (block diagonal I_3, G, G, G)."""
    ring = tag.context
    if tag.kind == "R" and ring.characteristic == 2:
        raise PreconditionError("the trace form of H_3(R) is degenerate in characteristic 2")
    out: List[Any] = list(values[:3])
    d = tag.dim
    for k in range(3):
        block = values[3 + k * d : 3 + (k + 1) * d]
        out.extend(_gram_block_solve(tag, block, ring))
    return tuple(out)


def _gram_block_solve(tag: AlgebraTag, g: Sequence[Any], ring: Any) -> List[Any]:
    if tag.kind == "R":
        # <x, y> = 2xy
        return [ring.div(g[0], ring.from_int(2))]
    if tag.kind == "C":
        return [g[1], g[0]]
    if tag.kind == "H":
        return [g[3], ring.neg(g[2]), ring.neg(g[1]), g[0]]
    return _gram_block_solve(AlgebraTag("H", ring), g[:4], ring) + _gram_block_solve(
        AlgebraTag("H", ring), g[4:], ring
    )


def gram_apply(tag: AlgebraTag, values: Sequence[Any]) -> Tuple[Any, ...]:
    """Gram * v; T(A, B) = A . Gram . B in coordinates."""
    ring = tag.context
    if tag.kind == "R":
        two = ring.from_int(2)
        return tuple(values[:3]) + tuple(ring.mul(two, v) for v in values[3:])
    # G is an involution for C, H, O
    return gram_solve(tag, values)


# ---------- Adjoint and cross product ----------


def adjoint(a: HermitianMatrix) -> HermitianMatrix:
    """
    A^#: T(A^#, B) = D_B det3(A) for all B.

    Raises PreconditionError for H_3(R) in characteristic 2, where the
    trace form cannot be inverted.
    """
    if a.n != 3:
        raise ShapeError("adjoint needs n = 3")
    data = cubic_data(a.tag.kind)
    grad = data.evaluate_gradient(a.coordinates(), a.context)
    return HermitianMatrix.from_coordinates(3, a.tag, gram_solve(a.tag, grad))


def cross(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """A x B = (A+B)^# - A^# - B^#."""
    if a.n != 3:
        raise ShapeError("cross needs n = 3")
    a._same(b)
    data = cubic_data(a.tag.kind)
    polar = data.hessian_apply(a.coordinates(), b.coordinates(), a.context)
    return HermitianMatrix.from_coordinates(3, a.tag, gram_solve(a.tag, polar))


def cross_matrix(a: HermitianMatrix) -> List[List[Any]]:
    """Coordinate matrix of B -> A x B."""
    data = cubic_data(a.tag.kind)
    hess = data.hessian_matrix(a.coordinates(), a.context)
    columns = [gram_solve(a.tag, [row[col] for row in hess]) for col in range(data.size)]
    return [[col[m] for col in columns] for m in range(data.size)]
