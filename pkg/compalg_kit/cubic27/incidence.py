# compalg_kit/cubic27/incidence.py

"""
The 27 points and 45 signed planes read off the cubic form

    beta(A, B, C) = det A + det B + det C - tr(ABC)

on triples of 3x3 matrices. Each monomial of beta is a plane; its
coefficient is the plane's sign.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from compalg_kit.errors import PreconditionError, ShapeError
from compalg_kit.foundation.codec import IncidencePayload, PlanePayload
from compalg_kit.foundation.polynomial import POLY, Polynomial
from compalg_kit.foundation.tally import Tally

logger = logging.getLogger(__name__)

MATRIX_NAMES = ("a", "b", "c")
POINT_LABELS: Tuple[str, ...] = tuple(
    f"{m}{i}{j}" for m in MATRIX_NAMES for i in range(1, 4) for j in range(1, 4)
)

# census constants, all derived by enumeration
PLANE_COUNT = 45
PLANES_PER_POINT = 5
GRID_COUNT = 120
POSITIVE_PLANES = 9
AUTOMORPHISM_COUNT = 51840


def symbolic_matrix(name: str) -> List[List[Polynomial]]:
    return [[POLY.variable(f"{name}{i}{j}") for j in range(1, 4)] for i in range(1, 4)]


def det_3x3(ring: Any, m: Sequence[Sequence[Any]]) -> Any:
    acc = ring.zero()
    for perm in itertools.permutations(range(3)):
        term = ring.one()
        for i, j in enumerate(perm):
            term = ring.mul(term, m[i][j])
        inversions = sum(1 for i, j in itertools.combinations(perm, 2) if i > j)
        acc = ring.sub(acc, term) if inversions % 2 else ring.add(acc, term)
    return acc


def trace_triple(ring: Any, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]], c: Sequence[Sequence[Any]]) -> Any:
    """tr(ABC) = sum a_ij b_jk c_ki."""
    acc = ring.zero()
    for i, j, k in itertools.product(range(3), repeat=3):
        acc = ring.add(acc, ring.mul(ring.mul(a[i][j], b[j][k]), c[k][i]))
    return acc


def beta_raw(ring: Any, a: Any, b: Any, c: Any) -> Any:
    acc = ring.add(ring.add(det_3x3(ring, a), det_3x3(ring, b)), det_3x3(ring, c))
    return ring.sub(acc, trace_triple(ring, a, b, c))


@lru_cache(maxsize=None)
def beta_polynomial() -> Polynomial:
    """beta expanded over Z in the 27 variables a11..c33."""
    return beta_raw(POLY, *(symbolic_matrix(m) for m in MATRIX_NAMES))


# ---------- Incidence structure ----------


@dataclass(frozen=True)
class TritangentPlane:
    points: Tuple[str, str, str]
    sign: int

    def __contains__(self, point: str) -> bool:
        return point in self.points


@dataclass(frozen=True)
class IncidenceStructure:
    points: Tuple[str, ...]
    planes: Tuple[TritangentPlane, ...]
    _through: Dict[str, Tuple[int, ...]] = field(repr=False, compare=False)
    _neighbours: Dict[str, FrozenSet[str]] = field(repr=False, compare=False)

    def plane_sets(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(p.points) for p in self.planes)

    def signs(self) -> Tuple[int, ...]:
        return tuple(p.sign for p in self.planes)

    def neighbours(self, point: str) -> FrozenSet[str]:
        return self._neighbours[point]


@lru_cache(maxsize=None)
def build_structure() -> IncidenceStructure:
    planes: List[TritangentPlane] = []
    for monomial, coeff in beta_polynomial().items():
        if len(set(monomial)) != 3 or coeff not in (1, -1):
            raise ShapeError(f"unexpected beta term {coeff} * {monomial}")
        planes.append(TritangentPlane(tuple(sorted(monomial)), coeff))  # type: ignore[arg-type]
    planes.sort(key=lambda p: p.points)
    through: Dict[str, List[int]] = {p: [] for p in POINT_LABELS}
    neighbours: Dict[str, set] = {p: set() for p in POINT_LABELS}
    for idx, plane in enumerate(planes):
        for pt in plane.points:
            through[pt].append(idx)
            neighbours[pt].update(q for q in plane.points if q != pt)
    logger.debug("incidence structure: %d planes", len(planes))
    return IncidenceStructure(
        POINT_LABELS,
        tuple(planes),
        {p: tuple(v) for p, v in through.items()},
        {p: frozenset(v) for p, v in neighbours.items()},
    )


def _point(p: str) -> str:
    if p not in POINT_LABELS:
        raise ShapeError(f"unknown point {p!r}")
    return p


def meets(p: str, q: str, structure: Optional[IncidenceStructure] = None) -> bool:
    """Distinct points lying on a common plane."""
    s = structure or build_structure()
    return _point(p) != _point(q) and q in s.neighbours(p)


def planes_through(p: str, structure: Optional[IncidenceStructure] = None) -> List[TritangentPlane]:
    s = structure or build_structure()
    return [s.planes[i] for i in s._through[_point(p)]]


def is_double_six(e: Sequence[str], f: Sequence[str]) -> bool:
    """E_i, E_j disjoint; F_i, F_j disjoint; E_i meets F_j iff i != j."""
    if len(e) != 6 or len(f) != 6:
        raise ShapeError("a double-six is two sextuples")
    if len(set(e) | set(f)) != 12:
        raise PreconditionError("double-six points must be 12 distinct points")
    s = build_structure()
    for i, j in itertools.combinations(range(6), 2):
        if meets(e[i], e[j], s) or meets(f[i], f[j], s):
            return False
    return all(meets(e[i], f[j], s) == (i != j) for i in range(6) for j in range(6))


# ---------- 3-grids ----------

Grid = Tuple[Tuple[int, int, int], Tuple[int, int, int]]


def _disjoint_triples(structure: IncidenceStructure) -> Dict[FrozenSet[str], List[Tuple[int, int, int]]]:
    sets = [frozenset(p.points) for p in structure.planes]
    by_cover: Dict[FrozenSet[str], List[Tuple[int, int, int]]] = {}
    for i, j, k in itertools.combinations(range(len(sets)), 3):
        if sets[i] & sets[j] or sets[i] & sets[k] or sets[j] & sets[k]:
            continue
        by_cover.setdefault(sets[i] | sets[j] | sets[k], []).append((i, j, k))
    return by_cover


@lru_cache(maxsize=None)
def enumerate_3grids() -> Tuple[Grid, ...]:
    """
    Couples (l, m) of plane triples, as sorted plane indices with l < m, such
    that each triple is pairwise disjoint and every l_i meets every m_j in
    exactly one point (so the 9 intersection points are distinct).
    """
    structure = build_structure()
    sets = [frozenset(p.points) for p in structure.planes]
    grids: List[Grid] = []
    for triples in _disjoint_triples(structure).values():
        for first, second in itertools.combinations(sorted(triples), 2):
            if all(len(sets[x] & sets[y]) == 1 for x in first for y in second):
                grids.append((first, second))
    grids.sort()
    logger.debug("%d 3-grids", len(grids))
    return tuple(grids)


def grid_points(grid: Grid) -> List[str]:
    structure = build_structure()
    first, second = grid
    return [
        next(iter(frozenset(structure.planes[x].points) & frozenset(structure.planes[y].points)))
        for x in first
        for y in second
    ]


def check_theta_grids(signs: Optional[Sequence[int]] = None) -> Dict[str, Any]:
    """theta(l1)theta(l2)theta(l3) + theta(m1)theta(m2)theta(m3) = 0 on every grid."""
    structure = build_structure()
    theta = list(signs) if signs is not None else list(structure.signs())
    if len(theta) != len(structure.planes):
        raise ShapeError(f"expected {len(structure.planes)} signs")
    tally = Tally()
    for first, second in enumerate_3grids():
        left = theta[first[0]] * theta[first[1]] * theta[first[2]]
        right = theta[second[0]] * theta[second[1]] * theta[second[2]]
        tally.record(left + right == 0, {"l": list(first), "m": list(second)})
    product = 1
    for s in theta:
        product *= s
    return tally.as_result(
        grid_count=len(enumerate_3grids()),
        sign_product=product,
        positive_planes=sum(1 for s in theta if s > 0),
    )


def evaluate_alpha(values: Mapping[str, Any], ring: Any) -> Any:
    """sum over planes of theta(l) * prod f(p)."""
    acc = ring.zero()
    for plane in build_structure().planes:
        term = ring.from_int(plane.sign)
        for p in plane.points:
            term = ring.mul(term, values[p])
        acc = ring.add(acc, term)
    return acc


def incidence_payload(config: Optional[Dict[str, Any]] = None) -> IncidencePayload:
    structure = build_structure()
    return IncidencePayload(
        config=config or {},
        points=list(structure.points),
        planes=[PlanePayload(points=list(p.points), sign=p.sign) for p in structure.planes],
    )
