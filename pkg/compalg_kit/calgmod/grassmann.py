# compalg_kit/calgmod/grassmann.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional

from compalg_kit.calgmod.submodules import (
    RightSubmodule,
    block,
    decompose_pm,
    require_free,
    right_multiply,
    span_flat,
)
from compalg_kit.compalg.algebra import AlgebraTag, unit_h
from compalg_kit.errors import ShapeError, SubmoduleError
from compalg_kit.foundation.linalg import Row, SubspaceK, kernel_rows


@dataclass(frozen=True)
class GrassmannDatum:
    """
    Classical image of a free module.

    Over H: ``plus`` is E+ read in R(e)^n = K^(2n) through the first column
    (x11, x21) of every block, and ``minus`` is None. Over C: ``plus`` and
    ``minus`` are E+ and E- in K^n.
    """

    tag: AlgebraTag
    n: int
    plus: SubspaceK
    minus: Optional[SubspaceK] = None

    @property
    def rank(self) -> int:
        if self.tag.kind == "H":
            return self.plus.dim // 2
        return self.plus.dim


def _project(ctx: Any, space: SubspaceK, indices: List[int]) -> SubspaceK:
    return SubspaceK.span(ctx, (tuple(v[i] for i in indices) for v in space.basis), len(indices))


def grassmann_iso(module: RightSubmodule) -> GrassmannDatum:
    """H: E -> E+ in G(2r, 2n). C: E -> (E+, E-) in G(r, n) x G(r, n)."""
    require_free(module)
    tag, n, ctx = module.tag, module.n, module.context
    plus, minus = decompose_pm(module)
    if tag.kind == "H":
        first_column = [i for t in range(n) for i in (4 * t, 4 * t + 2)]
        return GrassmannDatum(tag, n, _project(ctx, plus, first_column))
    return GrassmannDatum(
        tag,
        n,
        _project(ctx, plus, [2 * t for t in range(n)]),
        _project(ctx, minus, [2 * t + 1 for t in range(n)]),
    )


def grassmann_inverse(datum: GrassmannDatum) -> RightSubmodule:
    """H: E+ -> E+ ⊕ E+·h. C: (E+, E-) -> span of the paired generators."""
    tag, n = datum.tag, datum.n
    ctx = tag.context
    zero = ctx.zero()
    if tag.kind == "H":
        if datum.plus.ambient_dim != 2 * n:
            raise ShapeError(f"expected a subspace of K^{2 * n}")
        lifts: List[Row] = []
        for u in datum.plus.basis:
            lifts.append(
                tuple(c for t in range(n) for c in (u[2 * t], zero, u[2 * t + 1], zero))
            )
        h = unit_h(tag)
        module = span_flat(tag, n, lifts + [right_multiply(tag, v, h) for v in lifts])
        if module.dim != 2 * datum.plus.dim:
            raise SubmoduleError("E+ ⊕ E+·h has the wrong dimension")
        return module
    if datum.minus is None or datum.plus.dim != datum.minus.dim:
        raise SubmoduleError("C needs E+ and E- of equal dimension")
    paired: List[Row] = []
    for p_vec, m_vec in zip(datum.plus.basis, datum.minus.basis):
        paired.append(tuple(c for t in range(n) for c in (p_vec[t], m_vec[t])))
    if not paired:
        return RightSubmodule.zero(tag, n)
    return span_flat(tag, n, paired)


# ---------- Duality ----------


def pairing_rows(tag: AlgebraTag, n: int, x: Row) -> List[Row]:
    """Rows of a -> l_a(x) = sum_u conj(a_u) x_u, a linear map K^(n·d) -> K^d."""
    d = tag.dim
    columns: List[Row] = []
    for u in range(n):
        xu = block(tag, x, u)
        for lam in tag.basis():
            columns.append(tag.mul(tag.conj(lam), xu))
    return [tuple(col[m] for col in columns) for m in range(d)]


def dual_perp(module: RightSubmodule) -> RightSubmodule:
    """
    Y^perp = {a : l_a(y) = 0 for all y in Y} with l_a(x) = sum conj(a_u) x_u.

    Again a right submodule (l_{a·lambda} = conj(lambda)·l_a) of dimension
    n·d - dim Y; applying it twice gives Y back.
    """
    require_free(module)
    tag, n, ctx = module.tag, module.n, module.context
    nd = n * tag.dim
    rows: List[Row] = []
    for y in module.space.basis:
        rows.extend(pairing_rows(tag, n, y))
    if not rows:
        return RightSubmodule.full(tag, n)
    kernel = kernel_rows(ctx, rows, nd)
    space = SubspaceK.span(ctx, kernel, nd)
    if space.dim != nd - module.dim:
        raise SubmoduleError("pairing is degenerate")
    return RightSubmodule(tag, n, space)


def component_count_formula(n: int, r: int) -> int:
    """min{n + 1 - r, r + 1}; reported next to the census, never assumed."""
    return min(n + 1 - r, r + 1)
