# compalg_kit/calgmod/generators.py

from __future__ import annotations

import logging
from typing import List, Sequence

from compalg_kit.calgmod.submodules import (
    RightSubmodule,
    block,
    coordinate_kernel,
    coordinate_projection,
    cyclic_space,
    decompose_pm,
    flatten,
    nonzero_block,
    require_free,
    right_multiply,
    split_blocks,
)
from compalg_kit.compalg.algebra import AlgebraTag, Coords, unit_e, unit_f, unit_h
from compalg_kit.errors import PreconditionError, SubmoduleError
from compalg_kit.foundation.linalg import MatrixK, Row, SubspaceK, solve, vec_add, vec_scale

logger = logging.getLogger(__name__)


def _vector_with_unit_block(tag: AlgebraTag, space: SubspaceK, t: int) -> Row:
    """v in the space with block t equal to 1 (pi_t must be onto A)."""
    ctx = tag.context
    basis = space.basis
    system = MatrixK(
        ctx,
        tuple(tuple(block(tag, b, t)[j] for b in basis) for j in range(tag.dim)),
        len(basis),
    )
    coeffs = solve(system, tag.one())
    if coeffs is None:
        raise SubmoduleError(f"coordinate {t} does not reach the unit")
    acc: Row = (ctx.zero(),) * space.ambient_dim
    for c, b in zip(coeffs, basis):
        acc = vec_add(ctx, acc, vec_scale(ctx, c, b))
    return acc


def _merge_halves(tag: AlgebraTag, n: int, x: Row, y: Row) -> Row:
    """
    x + y·g generating xH ⊕ yH, for xH, yH of dimension 2 in direct sum.

    The kernels of x and y·g (lines of K^2) must differ; one of g = 1, h or
    the shear [[1, 1], [0, 1]] always separates them.
    """
    ctx = tag.context
    shear = tag.from_ints((1, 1, 0, 1))
    for g in (tag.one(), unit_h(tag), shear):
        candidate = vec_add(ctx, x, right_multiply(tag, y, g))
        if cyclic_space(tag, n, candidate).dim == tag.dim:
            return candidate
    raise SubmoduleError("could not merge two half generators")


def _extract(tag: AlgebraTag, n: int, space: SubspaceK, active: List[int]) -> List[Row]:
    if space.dim == 0:
        return []
    ranks = [(t, coordinate_projection(space, tag, t).dim) for t in active]

    # a coordinate onto A splits off a free summand
    for t, r in ranks:
        if r == tag.dim:
            v = _vector_with_unit_block(tag, space, t)
            rest = space.intersect(coordinate_kernel(tag, n, t))
            logger.debug("free summand at coordinate %d, %d dims left", t, rest.dim)
            return [v] + _extract(tag, n, rest, [s for s in active if s != t])

    for t, r in ranks:
        if r == 0:
            return _extract(tag, n, space, [s for s in active if s != t])

    # every coordinate image is a 2-dimensional right ideal
    t = active[0]
    e, f = unit_e(tag), unit_f(tag)
    x = next(
        w
        for b in space.basis
        for w in (right_multiply(tag, b, e), right_multiply(tag, b, f))
        if nonzero_block(tag, w, t)
    )
    rest = space.intersect(coordinate_kernel(tag, n, t))
    gens = _extract(tag, n, rest, [s for s in active if s != t])
    for i, y in enumerate(gens):
        if cyclic_space(tag, n, y).dim < tag.dim:
            gens[i] = _merge_halves(tag, n, x, y)
            return gens
    return [x] + gens


def extract_generators(module: RightSubmodule) -> List[List[Coords]]:
    """
    ceil(dim E / 4) vectors of H^n whose cyclic submodules direct-sum to E.

    Induction on the coordinates: a coordinate projecting onto H splits off a
    free summand, a zero coordinate is dropped, and otherwise a half-rank
    piece xH is split off and fused with a previous half-rank generator.
    """
    if module.tag.kind != "H":
        raise PreconditionError("extract_generators works over H")
    gens = _extract(module.tag, module.n, module.space, list(range(module.n)))
    return [split_blocks(module.tag, v) for v in gens]


def generator_dims(tag: AlgebraTag, n: int, gens: Sequence[Sequence[Coords]]) -> List[int]:
    return [cyclic_space(tag, n, flatten(tag, g)).dim for g in gens]


def paired_generators(module: RightSubmodule) -> List[List[Coords]]:
    """Over C: v_i = p_i + m_i from echelon bases of E+ and E-, paired in order."""
    if module.tag.kind != "C":
        raise PreconditionError("paired_generators works over C")
    require_free(module)
    tag = module.tag
    ctx = tag.context
    plus, minus = decompose_pm(module)
    out: List[List[Coords]] = []
    for p_vec, m_vec in zip(plus.basis, minus.basis):
        out.append(split_blocks(tag, vec_add(ctx, p_vec, m_vec)))
    return out
