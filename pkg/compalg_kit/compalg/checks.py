# compalg_kit/compalg/checks.py

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Any, Dict, List, Tuple

from compalg_kit.compalg.algebra import (
    AlgebraTag,
    CompElement,
    Coords,
    enumerate_elements,
    isotropic_elements,
    x0,
)
from compalg_kit.errors import FieldError, PreconditionError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import SubspaceK, kernel_rows
from compalg_kit.foundation.tally import Tally, bullet_report

logger = logging.getLogger(__name__)


# ---------- Images of multiplication operators ----------


def left_image(tag: AlgebraTag, z: Coords) -> SubspaceK:
    """L(z) = z·A."""
    return SubspaceK.span(tag.context, [tag.mul(z, b) for b in tag.basis()], tag.dim)


def right_image(tag: AlgebraTag, z: Coords) -> SubspaceK:
    """R(z) = A·z."""
    return SubspaceK.span(tag.context, [tag.mul(b, z) for b in tag.basis()], tag.dim)


def left_kernel(tag: AlgebraTag, z: Coords) -> SubspaceK:
    rows = tag.operator_rows(z, "left")
    return SubspaceK.span(tag.context, kernel_rows(tag.context, rows, tag.dim), tag.dim)


def apply_left(tag: AlgebraTag, z: Coords, space: SubspaceK) -> SubspaceK:
    """L_z[space]."""
    return SubspaceK.span(tag.context, [tag.mul(z, v) for v in space.basis], tag.dim)


def apply_right(tag: AlgebraTag, z: Coords, space: SubspaceK) -> SubspaceK:
    return SubspaceK.span(tag.context, [tag.mul(v, z) for v in space.basis], tag.dim)


def is_totally_isotropic(tag: AlgebraTag, space: SubspaceK) -> bool:
    """Q vanishes on the span iff it vanishes on the basis and the basis is pairwise orthogonal."""
    ctx = tag.context
    basis = space.basis
    for i, u in enumerate(basis):
        if not ctx.is_zero(tag.norm(u)):
            return False
        for v in basis[i + 1 :]:
            if not ctx.is_zero(tag.bilinear(u, v)):
                return False
    return True


def alternativity_holds(tag: AlgebraTag, z: Coords, x: Coords) -> bool:
    """conj(z)(z x) = Q(z) x."""
    lhs = tag.mul(tag.conj(z), tag.mul(z, x))
    return lhs == tag.scale(tag.norm(z), x)


def _nonzero_isotropic(tag: AlgebraTag, z: Coords, name: str) -> None:
    if tag.is_zero(z):
        raise PreconditionError(f"{name} must be nonzero")
    if not tag.context.is_zero(tag.norm(z)):
        raise PreconditionError(f"{name} must be isotropic (Q = 0)")


# ---------- Maximal isotropic images ----------


def check_composition_general(z: CompElement) -> Dict[str, Any]:
    """
    Images of multiplication by z.

    - Q(z) != 0: L(z) = R(z) = A.
    - Q(z) == 0: L(z), R(z) and ker L_z have dimension dim A / 2, the images are
      totally isotropic, and ker L_z = L(conj z).
    """
    tag = z.tag
    if tag.kind == "R":
        raise PreconditionError("R has no proper isotropic images")
    if z.is_zero():
        raise PreconditionError("z must be nonzero")
    c = z.coords
    left = left_image(tag, c)
    right = right_image(tag, c)
    kernel = left_kernel(tag, c)
    bullets: Dict[str, bool] = {
        "alternativity": all(alternativity_holds(tag, c, b) for b in tag.basis()),
    }
    if not tag.context.is_zero(tag.norm(c)):
        bullets["left_image_full"] = left.dim == tag.dim
        bullets["right_image_full"] = right.dim == tag.dim
    else:
        half = tag.dim // 2
        bullets["left_image_half"] = left.dim == half
        bullets["right_image_half"] = right.dim == half
        bullets["kernel_half"] = kernel.dim == half
        bullets["left_image_isotropic"] = is_totally_isotropic(tag, left)
        bullets["right_image_isotropic"] = is_totally_isotropic(tag, right)
        bullets["kernel_is_conjugate_image"] = kernel == left_image(tag, tag.conj(c))
    return bullet_report(
        bullets, dims={"left": left.dim, "right": right.dim, "kernel": kernel.dim}
    )


def annihilator_pair(tag: AlgebraTag, z1: Coords, z2: Coords) -> bool:
    """z2 in L(z1)  <=>  z1 in L(z2)  <=>  conj(z1) z2 = 0, for nonzero isotropic z1, z2."""
    _nonzero_isotropic(tag, z1, "z1")
    _nonzero_isotropic(tag, z2, "z2")
    a = left_image(tag, z1).contains_vector(z2)
    b = left_image(tag, z2).contains_vector(z1)
    c = tag.is_zero(tag.mul(tag.conj(z1), z2))
    return a == b == c


# ---------- Triality ----------


def check_triality(x: CompElement, y: CompElement) -> Dict[str, Any]:
    """
    The three intersection bullets for isotropic octonions x, y, plus parity.

    (i)   dim L(x)∩L(y) >= 2  <=>  dim R(x)∩R(y) >= 2  <=>  <x, y> = 0
    (ii)  dim L(x)∩L(y) = 2  =>  L(x)∩L(y) = L_x[L(conj y)] = L_y[L(conj x)]
          (and the mirrored statement for R)
    (iii) xy = 0  <=>  dim L(x)∩R(y) = 3
    """
    tag = x.tag
    if tag.kind != "O" or y.tag != tag:
        raise PreconditionError("triality needs two octonions over one field")
    a, b = x.coords, y.coords
    _nonzero_isotropic(tag, a, "x")
    _nonzero_isotropic(tag, b, "y")
    ctx = tag.context

    lx, ly = left_image(tag, a), left_image(tag, b)
    rx, ry = right_image(tag, a), right_image(tag, b)
    ll = lx.intersect(ly)
    rr = rx.intersect(ry)
    lr = lx.intersect(ry)
    orthogonal = ctx.is_zero(tag.bilinear(a, b))

    bullets: Dict[str, bool] = {
        "intersections_vs_orthogonality": (ll.dim >= 2) == (rr.dim >= 2) == orthogonal,
        "product_zero_vs_mixed_dim3": tag.is_zero(tag.mul(a, b)) == (lr.dim == 3),
        "mixed_dim_in_1_3": lr.dim in (1, 3),
        "parity_same_family_even": ll.dim % 2 == 0 and rr.dim % 2 == 0,
        "parity_mixed_family_odd": lr.dim % 2 == 1,
    }
    if ll.dim == 2:
        bullets["left_pencil"] = (
            ll == apply_left(tag, a, left_image(tag, tag.conj(b)))
            and ll == apply_left(tag, b, left_image(tag, tag.conj(a)))
        )
    if rr.dim == 2:
        bullets["right_pencil"] = (
            rr == apply_right(tag, a, right_image(tag, tag.conj(b)))
            and rr == apply_right(tag, b, right_image(tag, tag.conj(a)))
        )
    return bullet_report(bullets, dims={"LL": ll.dim, "RR": rr.dim, "LR": lr.dim})


def x0_display(ctx: FieldContext) -> Dict[str, Any]:
    """L(x0), R(x0) coordinate patterns and L(x0) ∩ R(x0) = K·x0."""
    tag = AlgebraTag("O", ctx)
    base = x0(tag)

    def unit(i: int) -> Coords:
        return tuple(ctx.one() if k == i else ctx.zero() for k in range(8))

    # coordinates: A = (E11, E12, E21, E22), then B
    expected_left = SubspaceK.span(ctx, [unit(0), unit(1), unit(4), unit(6)], 8)
    expected_right = SubspaceK.span(ctx, [unit(0), unit(2), unit(5), unit(7)], 8)
    left = left_image(tag, base)
    right = right_image(tag, base)
    meet = left.intersect(right)
    return bullet_report(
        {
            "left_pattern": left == expected_left,
            "right_pattern": right == expected_right,
            "meet_is_line_through_x0": meet == SubspaceK.span(ctx, [base], 8),
        }
    )


# ---------- Exhaustive sweeps ----------


def composition_law_exhaustive(tag: AlgebraTag) -> Dict[str, Any]:
    """Q(xy) = Q(x)Q(y) and conj(xy) = conj(y)conj(x) over every pair."""
    ctx = tag.context
    if not ctx.is_finite:
        raise FieldError("exhaustive sweep needs a finite field")
    elements: List[Coords] = list(enumerate_elements(tag))
    tally = Tally()
    for x in elements:
        qx = tag.norm(x)
        for y in elements:
            xy = tag.mul(x, y)
            ok = tag.norm(xy) == ctx.mul(qx, tag.norm(y)) and tag.conj(xy) == tag.mul(
                tag.conj(y), tag.conj(x)
            )
            tally.record(ok, {"x": x, "y": y})
    return tally.as_result(algebra=tag.kind, field=ctx.label)


def isotropic_sweep(tag: AlgebraTag) -> Dict[str, Any]:
    """check_composition_general on every nonzero isotropic element."""
    candidates = isotropic_elements(tag)
    logger.debug("isotropic sweep over %d elements of %s", len(candidates), tag.kind)
    tally = Tally()
    for z in candidates:
        report = check_composition_general(CompElement(tag, z))
        tally.record(report["success"], {"z": z, "bullets": report["bullets"]})
    return tally.as_result(candidates=len(candidates))


def _proportional(ctx: FieldContext, x: Coords, y: Coords) -> bool:
    pivot = next(i for i, v in enumerate(y) if not ctx.is_zero(v))
    lam = ctx.div(x[pivot], y[pivot])
    return all(a == ctx.mul(lam, b) for a, b in zip(x, y))


def injectivity_sweep(tag: AlgebraTag) -> Dict[str, Any]:
    """
    Fibres of [L] and [R] on the projectivized quadric.

    Every fibre must be a single projective point, i.e. exactly p - 1
    pairwise proportional vectors.
    """
    ctx = tag.context
    fibres: Dict[str, Dict[Tuple, List[Coords]]] = {
        "left": defaultdict(list),
        "right": defaultdict(list),
    }
    for z in isotropic_elements(tag):
        fibres["left"][left_image(tag, z).key()].append(z)
        fibres["right"][right_image(tag, z).key()].append(z)
    tally = Tally()
    for side, groups in fibres.items():
        for members in groups.values():
            ok = len(members) == ctx.order - 1 and all(
                _proportional(ctx, m, members[0]) for m in members
            )
            tally.record(ok, {"side": side, "fibre": members[:4]})
        tally.note(f"{side}_fibres", len(groups))
    return tally.as_result()
