# compalg_kit/calgmod/census.py

"""
Exhaustive enumeration of right submodules over F_2 and F_3.

Every right submodule E is the sum of the cyclic modules v·A for v in
E·e and E·f, so the search grows submodules one cyclic piece at a time
from the vectors of A^n·e and A^n·f, keeping each level as a set of
canonical echelon keys.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from compalg_kit.calgmod.grassmann import component_count_formula
from compalg_kit.calgmod.submodules import (
    RightSubmodule,
    cyclic_space,
    decompose_pm,
    idempotent_image,
    is_free,
)
from compalg_kit.compalg.algebra import AlgebraTag, algebra, unit_e, unit_f
from compalg_kit.errors import PreconditionError, ScaleGuardError
from compalg_kit.foundation.codec import CensusGroup, CensusPayload, field_header
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import Row, SubspaceK, is_zero_vector
from compalg_kit.foundation.sampling import parallel_map

logger = logging.getLogger(__name__)

Key = Tuple[Row, ...]

DESK_PRIMES = (2, 3)
DESK_AMBIENT = 12


def check_scale(tag: AlgebraTag, n: int, target_dim: Optional[int] = None) -> None:
    ctx = tag.context
    if tag.kind not in ("C", "H"):
        raise PreconditionError(f"enumeration is defined for C and H, not {tag.kind}")
    if not ctx.is_finite or ctx.characteristic not in DESK_PRIMES:
        raise ScaleGuardError(f"enumeration runs over F_2 or F_3, not {ctx.label}")
    if n < 1 or n * tag.dim > DESK_AMBIENT:
        raise ScaleGuardError(
            f"n·dim A = {n * tag.dim} exceeds the desk-scale limit {DESK_AMBIENT}"
        )
    if target_dim is not None and not 0 <= target_dim <= n * tag.dim:
        raise ScaleGuardError(f"target dimension {target_dim} outside [0, {n * tag.dim}]")


def _idempotent_vectors(tag: AlgebraTag, n: int) -> List[Row]:
    """Nonzero vectors of A^n·e and A^n·f, lexicographic."""
    ctx = tag.context
    out: Set[Row] = set()
    for idem in (unit_e(tag), unit_f(tag)):
        image = idempotent_image(tag, n, idem)
        for coeffs in itertools.product(range(ctx.order), repeat=image.dim):
            v = [ctx.zero()] * image.ambient_dim
            for c, row in zip(coeffs, image.basis):
                if c:
                    v = [ctx.add(s, ctx.mul(c, x)) for s, x in zip(v, row)]
            if not is_zero_vector(v):
                out.add(tuple(v))
    return sorted(out)


def _normalize(ctx: FieldContext, v: Row) -> Row:
    lead = next(x for x in v if x != 0)
    inv = ctx.inv(lead)
    return tuple(ctx.mul(inv, x) for x in v)


def _expand(job: Tuple[str, FieldContext, int, int, Sequence[Row], Sequence[Key]]) -> List[Key]:
    """All S + v·A (dim <= limit) for S in the chunk; module level for the process pool."""
    kind, ctx, n, limit, candidates, keys = job
    tag = algebra(kind, ctx)
    nd = n * tag.dim
    grown: Set[Key] = set()
    for key in keys:
        space = SubspaceK(ctx, nd, key)
        tried: Set[Row] = set()
        for v in candidates:
            r = space.reduce(v)
            if is_zero_vector(r):
                continue
            r = _normalize(ctx, r)
            if r in tried:
                continue
            tried.add(r)
            bigger = space.sum(cyclic_space(tag, n, r))
            if bigger.dim <= limit:
                grown.add(bigger.key())
    return sorted(grown)


def _chunks(items: Sequence[Key], parts: int) -> Iterable[Sequence[Key]]:
    size = max(1, -(-len(items) // parts))
    for i in range(0, len(items), size):
        yield items[i : i + size]


def enumerate_right_submodules(
    tag: AlgebraTag, n: int, target_dim: Optional[int] = None, workers: int = 1
) -> List[RightSubmodule]:
    """
    Every right submodule of A^n of K-dimension target_dim (all dimensions when
    None), sorted by echelon key.
    """
    check_scale(tag, n, target_dim)
    ctx = tag.context
    nd = n * tag.dim
    limit = nd if target_dim is None else target_dim
    candidates = _idempotent_vectors(tag, n)
    zero_key: Key = ()
    found: Set[Key] = {zero_key}
    frontier: List[Key] = [zero_key]
    level = 0
    while frontier:
        jobs = [
            (tag.kind, ctx, n, limit, candidates, chunk)
            for chunk in _chunks(frontier, max(1, workers) * 4)
        ]
        fresh: Set[Key] = set()
        for keys in parallel_map(_expand, jobs, workers):
            fresh.update(k for k in keys if k not in found)
        found |= fresh
        frontier = sorted(fresh)
        level += 1
        logger.debug("level %d: %d new submodules (%d total)", level, len(fresh), len(found))
    keys = sorted(k for k in found if target_dim is None or len(k) == target_dim)
    return [RightSubmodule(tag, n, SubspaceK(ctx, nd, k)) for k in keys]


def census_groups(modules: Sequence[RightSubmodule]) -> List[CensusGroup]:
    counts: Counter = Counter()
    free: Dict[Tuple[int, int], bool] = {}
    for module in modules:
        plus, minus = decompose_pm(module)
        dims = (plus.dim, minus.dim)
        counts[dims] += 1
        free.setdefault(dims, is_free(module))
    return [
        CensusGroup(dims=list(dims), count=counts[dims], free=free[dims])
        for dims in sorted(counts)
    ]


def enumerate_submodules(
    kind: str,
    n: int,
    target_dim: int,
    context: FieldContext,
    workers: int = 1,
    extra_config: Optional[Dict[str, Any]] = None,
) -> CensusPayload:
    """
    Census of right submodules of dimension target_dim grouped by
    (dim E+, dim E-). The free groups form G_A(r, n); the realized group count
    is reported next to min{n + 1 - r, r + 1} without asserting either.
    """
    tag = algebra(kind.upper(), context)
    modules = enumerate_right_submodules(tag, n, target_dim, workers)
    groups = census_groups(modules)
    d = tag.dim
    formula = None
    if target_dim % d == 0:
        formula = component_count_formula(n, target_dim // d)
    config: Dict[str, Any] = {"alg": tag.name, "n": n, "dim": target_dim, **field_header(context)}
    config.update(extra_config or {})
    logger.info(
        "census %s^%d dim %d over %s: %d submodules in %d groups",
        tag.kind,
        n,
        target_dim,
        context.label,
        len(modules),
        len(groups),
    )
    return CensusPayload(
        config=config,
        total=len(modules),
        groups=groups,
        free_count=sum(g.count for g in groups if g.free),
        realized_group_count=len(groups),
        component_count_formula=formula,
    )
