# compalg_kit/cubic27/automorphisms.py

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional

from compalg_kit.cubic27.incidence import (
    POINT_LABELS,
    IncidenceStructure,
    beta_polynomial,
    build_structure,
)
from compalg_kit.errors import ShapeError
from compalg_kit.foundation.polynomial import Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AutomorphismCount:
    count: int
    complete: bool
    nodes: int


def _adjacency(structure: IncidenceStructure) -> List[int]:
    index = {p: i for i, p in enumerate(structure.points)}
    masks = [0] * len(structure.points)
    for p in structure.points:
        for q in structure.neighbours(p):
            masks[index[p]] |= 1 << index[q]
    return masks


def _search_order(adj: List[int]) -> List[int]:
    """Greedy order: each next point has the most neighbours among those placed."""
    order = [0]
    placed = 1
    while len(order) < len(adj):
        best = max(
            (v for v in range(len(adj)) if not placed >> v & 1),
            key=lambda v: (bin(adj[v] & placed).count("1"), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def incidence_automorphism_count(
    budget_seconds: float = 300.0, structure: Optional[IncidenceStructure] = None
) -> AutomorphismCount:
    """
    Point permutations preserving the meet relation, counted by backtracking.

    Three points meeting pairwise always share a plane, so these are exactly
    the permutations mapping planes to planes. A run that exhausts the
    budget returns the partial count with complete=False.
    """
    s = structure or build_structure()
    adj = _adjacency(s)
    n = len(adj)
    full = (1 << n) - 1
    order = _search_order(adj)
    image = [-1] * n
    deadline = time.monotonic() + budget_seconds
    count = 0
    nodes = 0
    out_of_time = False

    def extend(level: int, used: int) -> None:
        nonlocal count, nodes, out_of_time
        if level == n:
            count += 1
            return
        nodes += 1
        if nodes % 4096 == 0 and time.monotonic() > deadline:
            out_of_time = True
        if out_of_time:
            return
        v = order[level]
        mask = full & ~used
        for prior in order[:level]:
            w = image[prior]
            mask &= adj[w] if adj[v] >> prior & 1 else ~adj[w]
            if not mask:
                return
        while mask:
            low = mask & -mask
            target = low.bit_length() - 1
            image[v] = target
            extend(level + 1, used | low)
            mask ^= low
        image[v] = -1

    extend(0, 0)
    logger.info("automorphisms: %d (complete=%s, %d nodes)", count, not out_of_time, nodes)
    return AutomorphismCount(count, not out_of_time, nodes)


# ---------- Explicit permutations ----------


def is_automorphism(perm: Mapping[str, str]) -> bool:
    """A bijection of the 27 points mapping every plane onto a plane."""
    if set(perm) != set(POINT_LABELS) or set(perm.values()) != set(POINT_LABELS):
        raise ShapeError("a permutation of the 27 points is expected")
    planes = build_structure().plane_sets()
    return all(frozenset(perm[p] for p in plane) in planes for plane in planes)


def transpose_symmetry() -> Dict[str, str]:
    """(A, B, C) -> (A^T, C^T, B^T) on the 27 coordinates."""
    swap = {"a": "a", "b": "c", "c": "b"}
    return {p: f"{swap[p[0]]}{p[2]}{p[1]}" for p in POINT_LABELS}


def cyclic_symmetry() -> Dict[str, str]:
    """(A, B, C) -> (B, C, A)."""
    shift = {"a": "b", "b": "c", "c": "a"}
    return {p: f"{shift[p[0]]}{p[1:]}" for p in POINT_LABELS}


def row_swap_symmetry() -> Dict[str, str]:
    """
    (A, B, C) -> (S A, B, C S) with S swapping the first two coordinates.

    Planes go to planes; the signs of the det A and det C planes flip.
    """

    def swap(i: str) -> str:
        return {"1": "2", "2": "1"}.get(i, i)

    out = {}
    for p in POINT_LABELS:
        name, i, j = p[0], p[1], p[2]
        if name == "a":
            out[p] = f"a{swap(i)}{j}"
        elif name == "c":
            out[p] = f"c{i}{swap(j)}"
        else:
            out[p] = p
    return out


def permute_polynomial(poly: Polynomial, perm: Mapping[str, str]) -> Polynomial:
    return Polynomial(
        {tuple(sorted(perm[v] for v in m)): c for m, c in poly.items()}
    )


def preserves_beta(perm: Mapping[str, str]) -> bool:
    beta = beta_polynomial()
    return permute_polynomial(beta, perm) == beta
