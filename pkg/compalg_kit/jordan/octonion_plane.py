# compalg_kit/jordan/octonion_plane.py

"""
Rank-one points of the octonionic plane H_3(O).

The rank-one variety X is cut out by the minor quadrics; it splits as
X1 (Veronese images of associative triples) and X0 (matrices whose
off-diagonal entries span a 2-dimensional subalgebra with zero product).
"""

from __future__ import annotations

import itertools
import logging
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

from compalg_kit.compalg.algebra import AlgebraTag, Coords
from compalg_kit.errors import FieldError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import ClassifyPayload
from compalg_kit.foundation.fields import FieldContext, Scalar
from compalg_kit.foundation.linalg import SubspaceK, kernel_rows
from compalg_kit.foundation.tally import to_jsonable
from compalg_kit.jordan.cubic import det3_raw
from compalg_kit.jordan.hermitian import HermitianMatrix
from compalg_kit.jordan.rank_one import minor_residuals
from compalg_kit.jordan.veronese import generates_associative, veronese_raw

logger = logging.getLogger(__name__)


def _require_plane(a: HermitianMatrix) -> None:
    if a.tag.kind != "O":
        raise PreconditionError("octonionic plane expected")
    if a.n != 3:
        raise ShapeError("the octonionic plane needs n = 3")


def octonion_quadrics(a: HermitianMatrix) -> List[Scalar]:
    """3 scalar + 3x8 octonionic residuals; all zero iff A lies on X (A = 0 included)."""
    _require_plane(a)
    return [Scalar(a.context, r) for r in minor_residuals(a)]


def on_quadrics(a: HermitianMatrix) -> bool:
    ring = a.context
    return all(ring.is_zero(r) for r in minor_residuals(a))


# ---------- X0 / X1 classification ----------


def _witness(
    a: HermitianMatrix, zs: Sequence[Coords], scale: Any, case: str
) -> Dict[str, Any]:
    image = veronese_raw(a.tag, zs)
    return {
        "class": "X1",
        "case": case,
        "witness": {"z": [list(z) for z in zs], "scale": scale},
        "verified": image == a.scale(scale),
    }


def classify_rank_one_octonion(a: HermitianMatrix) -> Dict[str, Any]:
    """
    Decision tree:

    - a diagonal entry a_ii != 0: z = column i, nu_2(z) = a_ii·A;
    - an entry with re(a_ij) != 0: z_t = a_ti + a_tj, nu_2(z) = re(a_ij)·A;
    - otherwise the entries are isotropic and pure. Span of dimension 2 with
      zero products is X0; a line lies in a quaternion subalgebra and gives
      z_t = a_ti + a_tj·x with <a_ij, conj x> != 0.
    """
    _require_plane(a)
    if a.is_zero():
        raise PreconditionError("A must be nonzero")
    if not on_quadrics(a):
        raise PreconditionError("A is not rank one")
    tag, ctx = a.tag, a.context

    for i in range(3):
        if not ctx.is_zero(a.diag[i]):
            zs = [a.entry(t, i) for t in range(3)]
            return _witness(a, zs, a.diag[i], "diagonal")

    for i, j in itertools.combinations(range(3), 2):
        r = tag.re(a.entry(i, j))
        if not ctx.is_zero(r):
            zs = [tag.add(a.entry(t, i), a.entry(t, j)) for t in range(3)]
            return _witness(a, zs, r, "real_part")

    entries = [a.entry(0, 1), a.entry(0, 2), a.entry(1, 2)]
    span = SubspaceK.span(ctx, entries, 8)
    if span.dim == 2:
        products_vanish = all(
            tag.is_zero(tag.mul(x, y)) for x in span.basis for y in span.basis
        )
        return {
            "class": "X0",
            "case": "null_plane",
            "witness": {"null_plane": [list(v) for v in span.basis]},
            "verified": products_vanish,
        }
    if span.dim > 2:
        raise PreconditionError("off-diagonal span exceeds 2 on a rank-one matrix")

    i, j = next(p for p, x in zip([(0, 1), (0, 2), (1, 2)], entries) if not tag.is_zero(x))
    aij = a.entry(i, j)
    x = next(b for b in tag.basis() if not ctx.is_zero(tag.bilinear(aij, tag.conj(b))))
    zs = [tag.add(a.entry(t, i), tag.mul(a.entry(t, j), x)) for t in range(3)]
    return _witness(a, zs, tag.bilinear(aij, tag.conj(x)), "isotropic_line")


# ---------- Null planes over finite fields ----------


def _kernel_space(
    tag: AlgebraTag, conditions: Sequence[Callable[[Coords], Coords]]
) -> SubspaceK:
    """{z : f(z) = 0 for every f}; each f is K-linear A -> A."""
    ctx = tag.context
    columns = []
    for b in tag.basis():
        col: List[Any] = []
        for f in conditions:
            col.extend(f(b))
        columns.append(col)
    rows = [tuple(col[m] for col in columns) for m in range(len(columns[0]))]
    return SubspaceK.span(ctx, kernel_rows(ctx, rows, tag.dim), tag.dim)


def _elements(space: SubspaceK) -> Iterator[Coords]:
    ctx = space.context
    for coeffs in itertools.product(range(ctx.order), repeat=space.dim):
        v = [ctx.zero()] * space.ambient_dim
        for c, row in zip(coeffs, space.basis):
            if c:
                v = [ctx.add(s, ctx.mul(c, r)) for s, r in zip(v, row)]
        yield tuple(v)


def null_plane_search(ctx: FieldContext) -> Optional[List[Coords]]:
    """
    First 2-dimensional subspace of {re = 0} in O with identically zero
    product, scanning x in lexicographic order over a finite field.
    """
    if not ctx.is_finite:
        raise FieldError("null plane search needs a finite field")
    tag = AlgebraTag("O", ctx)
    for x in itertools.product(range(ctx.order), repeat=8):
        if tag.is_zero(x) or not ctx.is_zero(tag.re(x)) or not ctx.is_zero(tag.norm(x)):
            continue
        annihilator = _kernel_space(
            tag,
            [
                lambda z, x=x: tag.mul(x, z),
                lambda z, x=x: tag.mul(z, x),
                lambda z: (tag.re(z),),
            ],
        )
        line = SubspaceK.span(ctx, [x], 8)
        for y in _elements(annihilator):
            if line.contains_vector(y) or not ctx.is_zero(tag.norm(y)):
                continue
            logger.debug("null plane found: %s, %s", x, y)
            return [tuple(x), y]
    return None


def x0_matrix(tag: AlgebraTag, x: Coords, y: Coords) -> HermitianMatrix:
    """Zero diagonal, a_12 = x, a_13 = y, a_23 = x + y."""
    return HermitianMatrix.from_upper(
        3,
        tag,
        (tag.context.zero(),) * 3,
        {(0, 1): x, (0, 2): y, (1, 2): tag.add(x, y)},
    )


def null_plane_preimage_search(a: HermitianMatrix) -> Optional[List[Coords]]:
    """
    Exhaustive search for z with nu_2(z) = c·A (c != 0) when A has zero diagonal.

    By alternativity a preimage satisfies conj(z1) a12 = conj(z1) a13 = 0,
    a12 z2 = conj(z2) a23 = 0 and a13 z3 = a23 z3 = 0, so each z_t ranges over
    a linear subspace.
    """
    _require_plane(a)
    tag, ctx = a.tag, a.context
    if not ctx.is_finite:
        raise FieldError("preimage search needs a finite field")
    if any(not ctx.is_zero(r) for r in a.diag):
        raise PreconditionError("preimage search is for zero-diagonal matrices")
    a12, a13, a23 = a.entry(0, 1), a.entry(0, 2), a.entry(1, 2)
    z1_space = _kernel_space(
        tag, [lambda z: tag.mul(tag.conj(z), a12), lambda z: tag.mul(tag.conj(z), a13)]
    )
    z2_space = _kernel_space(
        tag, [lambda z: tag.mul(a12, z), lambda z: tag.mul(tag.conj(z), a23)]
    )
    z3_space = _kernel_space(tag, [lambda z: tag.mul(a13, z), lambda z: tag.mul(a23, z)])

    def isotropic(space: SubspaceK) -> List[Coords]:
        return [z for z in _elements(space) if ctx.is_zero(tag.norm(z))]

    z3_candidates = isotropic(z3_space)
    for c in ctx.nonzero_elements():
        target = a.scale(c)
        t12, t13 = target.entry(0, 1), target.entry(0, 2)
        for z1 in isotropic(z1_space):
            for z2 in isotropic(z2_space):
                if tag.mul(z1, tag.conj(z2)) != t12:
                    continue
                for z3 in z3_candidates:
                    if tag.mul(z1, tag.conj(z3)) != t13:
                        continue
                    if not generates_associative(tag, (z1, z2, z3)):
                        continue
                    if veronese_raw(tag, (z1, z2, z3)) == target:
                        return [z1, z2, z3]
    return None


def sum_of_rank_ones_check(a: HermitianMatrix, b: HermitianMatrix) -> bool:
    """det3(A + B) = 0 for rank-one A, B."""
    return a.context.is_zero(det3_raw(a + b))


# ---------- Reports ----------


def classify_payload(a: HermitianMatrix, config: Optional[Dict[str, Any]] = None) -> ClassifyPayload:
    """Rank-one verdict, the 27 residuals and, on X, the X0/X1 class with its witness."""
    _require_plane(a)
    ctx = a.context
    residuals = minor_residuals(a)
    first = next((k for k, r in enumerate(residuals) if not ctx.is_zero(r)), None)
    rank_one = first is None and not a.is_zero()
    verdict: Dict[str, Any] = {}
    if rank_one:
        verdict = classify_rank_one_octonion(a)
    return ClassifyPayload(
        config=config or {},
        rank_one=rank_one,
        residuals=[ctx.to_json(r) for r in residuals],
        first_nonzero_residual=first,
        class_=verdict.get("class"),
        witness=to_jsonable(verdict.get("witness")) if verdict else None,
    )
