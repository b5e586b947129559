# compalg_kit/jordan/veronese.py

from __future__ import annotations

import itertools
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from compalg_kit.compalg.algebra import AlgebraTag, CompElement, Coords
from compalg_kit.errors import NonAssociativeError, PreconditionError, ShapeError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import proportional_factor, rank_rows
from compalg_kit.jordan.hermitian import HermitianMatrix, pairs

logger = logging.getLogger(__name__)


def generates_associative(tag: AlgebraTag, zs: Sequence[Coords]) -> bool:
    """
    Whether the generators span an associative subalgebra.

    Any two octonions do; for more, a vanishing associator on every triple of
    generators is enough.
    """
    if tag.is_associative:
        return True
    for x, y, z in itertools.combinations(zs, 3):
        if not tag.is_zero(tag.associator(x, y, z)):
            return False
    return True


def veronese_raw(tag: AlgebraTag, zs: Sequence[Coords]) -> HermitianMatrix:
    n = len(zs)
    if n == 0:
        raise ShapeError("veronese needs at least one coordinate")
    if not generates_associative(tag, zs):
        raise NonAssociativeError("the octonions do not generate an associative subalgebra")
    diag = tuple(tag.norm(z) for z in zs)
    upper = tuple(tag.mul(zs[i], tag.conj(zs[j])) for i, j in pairs(n))
    return HermitianMatrix(n, tag, diag, upper)


def veronese(z: Sequence[CompElement]) -> HermitianMatrix:
    """nu_2(z) = (z_i conj(z_j))_ij."""
    if not z:
        raise ShapeError("veronese needs at least one coordinate")
    tag = z[0].tag
    if any(x.tag != tag for x in z):
        raise ShapeError("veronese coordinates must share one algebra")
    return veronese_raw(tag, [x.coords for x in z])


def scale_right(tag: AlgebraTag, zs: Sequence[Coords], lam: Coords) -> List[Coords]:
    return [tag.mul(z, lam) for z in zs]


def indeterminacy_member_raw(tag: AlgebraTag, zs: Sequence[Coords]) -> bool:
    if tag.kind not in ("C", "H"):
        raise PreconditionError("the indeterminacy locus is handled for C and H")
    # lambda -> (z_t lambda)_t stacked as an (n*d) x d matrix
    rows: List[Coords] = []
    for z in zs:
        rows.extend(tag.operator_rows(z, "left"))
    return rank_rows(tag.context, rows, tag.dim) < tag.dim


def indeterminacy_member(z: Sequence[CompElement]) -> bool:
    """True iff lambda -> z·lambda has a nontrivial kernel."""
    if not z:
        raise ShapeError("empty coordinate list")
    return indeterminacy_member_raw(z[0].tag, [x.coords for x in z])


def projective_scaling_holds(tag: AlgebraTag, zs: Sequence[Coords], lam: Coords) -> bool:
    """nu_2(z·lambda) = Q(lambda) nu_2(z)."""
    image = veronese_raw(tag, scale_right(tag, zs, lam))
    return image == veronese_raw(tag, zs).scale(tag.norm(lam))


def hermitian_proportional(a: HermitianMatrix, b: HermitianMatrix) -> Optional[Any]:
    """c with a = c·b (b nonzero), else None."""
    return proportional_factor(a.context, a.coordinates(), b.coordinates())


# ---------- Finite preimage tables ----------


def veronese_images(tag: AlgebraTag, n: int) -> Dict[Tuple[Any, ...], Coords]:
    """Every nonzero nu_2(z) over a finite field, keyed by coordinates, with one preimage."""
    ctx = tag.context
    if not isinstance(ctx, FieldContext) or not ctx.is_finite:
        raise PreconditionError("preimage tables need a finite field")
    elements = list(itertools.product(range(ctx.order), repeat=tag.dim))
    images: Dict[Tuple[Any, ...], Coords] = {}
    for zs in itertools.product(elements, repeat=n):
        if not generates_associative(tag, zs):
            continue
        image = veronese_raw(tag, zs)
        if image.is_zero():
            continue
        images.setdefault(image.coordinates(), tuple(zs))
    return images


def has_veronese_preimage(a: HermitianMatrix, images: Dict[Tuple[Any, ...], Coords]) -> bool:
    """A = c·nu_2(z) for some z and c != 0, against a precomputed table."""
    ctx = a.context
    coords = a.coordinates()
    for c in ctx.nonzero_elements():
        scaled = tuple(ctx.mul(c, v) for v in coords)
        if scaled in images:
            return True
    return False


# ---------- Octonionic scaling failure ----------


def _small_support(ctx: FieldContext, dim: int) -> Iterable[Coords]:
    one = ctx.one()
    for i in range(dim):
        yield tuple(one if k == i else ctx.zero() for k in range(dim))
    for i, j in itertools.combinations(range(dim), 2):
        yield tuple(one if k in (i, j) else ctx.zero() for k in range(dim))


def octonion_scaling_witness(ctx: FieldContext) -> Optional[Dict[str, Any]]:
    """
    Deterministic scan for (z1, z2) and lambda with Q(lambda) != 0 such that
    nu_2(z·lambda) is nonzero and not proportional to nu_2(z).

    Pairs always generate associative subalgebras, so both images are defined.
    """
    tag = AlgebraTag("O", ctx)
    candidates = list(_small_support(ctx, 8))
    for lam in candidates:
        if ctx.is_zero(tag.norm(lam)):
            continue
        for z1, z2 in itertools.product(candidates, repeat=2):
            base = veronese_raw(tag, (z1, z2))
            if base.is_zero():
                continue
            moved = veronese_raw(tag, scale_right(tag, (z1, z2), lam))
            if moved.is_zero():
                continue
            if hermitian_proportional(moved, base) is None:
                logger.debug("octonionic scaling witness found: %s %s %s", z1, z2, lam)
                return {
                    "z": [list(z1), list(z2)],
                    "lambda": list(lam),
                    "norm_lambda": tag.norm(lam),
                    "nu2_z": list(base.coordinates()),
                    "nu2_z_lambda": list(moved.coordinates()),
                }
    return None
