# compalg_kit/verify/suites/calgmod_suite.py

from __future__ import annotations

import random
from collections import Counter
from typing import Any, Dict, Tuple

from compalg_kit.calgmod.census import enumerate_right_submodules, enumerate_submodules
from compalg_kit.calgmod.generators import extract_generators, generator_dims, paired_generators
from compalg_kit.calgmod.grassmann import dual_perp, grassmann_inverse, grassmann_iso
from compalg_kit.calgmod.submodules import RightSubmodule, is_free, module_span
from compalg_kit.compalg.algebra import AlgebraTag, algebra, random_element
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.foundation.tally import Tally
from compalg_kit.verify.suites import sampled

Outcome = Tuple[bool, Dict[str, Any]]

# (dim E+, dim E-) -> count for right submodules of C^2 of K-dimension 2 over F_2
C2_DIM2_F2 = {(0, 2): 1, (1, 1): 9, (2, 0): 1}


def _desk_field(params: Dict[str, Any]) -> FieldContext:
    return FieldContext.prime(int(params.get("p", 2)))


def census_c2(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Groups (0,2):1, (1,1):9, (2,0):1 with the free locus exactly the (1,1) group."""
    payload = enumerate_submodules(
        "c", int(params.get("n", 2)), int(params.get("dim", 2)), _desk_field(params), context["workers"]
    )
    realized = {tuple(g.dims): g.count for g in payload.groups}
    free = sorted(tuple(g.dims) for g in payload.groups if g.free)
    return {
        "success": realized == C2_DIM2_F2 and free == [(1, 1)],
        "total": payload.total,
        "groups": [g.model_dump() for g in payload.groups],
        "component_count_formula": payload.component_count_formula,
    }


def census_h_even(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Every right submodule of H^n has even K-dimension; free exactly when 4 | dim."""
    tag = algebra("H", _desk_field(params))
    modules = enumerate_right_submodules(tag, int(params.get("n", 2)), workers=context["workers"])
    tally = Tally()
    by_dim: Counter = Counter()
    for m in modules:
        by_dim[m.dim] += 1
        tally.record(m.dim % 2 == 0, {"dim": m.dim, "key": m.key()})
    return tally.as_result(by_dim={str(k): v for k, v in sorted(by_dim.items())}, total=len(modules))


def _regenerates(module: RightSubmodule, gens: list) -> bool:
    if not gens:
        return module.dim == 0
    spanned = module_span(module.tag, gens)
    dims = generator_dims(module.tag, module.n, gens)
    return spanned.space == module.space and sum(dims) == module.dim


def extract_all_h(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """extract_generators regenerates every right submodule of H^n, as a direct sum, with ceil(dim/4) vectors."""
    tag = algebra("H", _desk_field(params))
    tally = Tally()
    for m in enumerate_right_submodules(tag, int(params.get("n", 2)), workers=context["workers"]):
        gens = extract_generators(m)
        ok = _regenerates(m, gens) and len(gens) == -(-m.dim // 4)
        tally.record(ok, {"key": m.key()})
    return tally.as_result()


def paired_all_c(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """paired_generators spans every free right submodule of C^n."""
    tag = algebra("C", _desk_field(params))
    tally = Tally()
    for m in enumerate_right_submodules(tag, int(params.get("n", 3)), workers=context["workers"]):
        if not is_free(m):
            continue
        tally.record(_regenerates(m, paired_generators(m)), {"key": m.key()})
    return tally.as_result()


# ---------- Random free modules ----------


def random_free_module(tag: AlgebraTag, n: int, rng: random.Random, attempts: int = 50) -> RightSubmodule:
    """A free module of random rank 1..n, resampling degenerate spans."""
    for _ in range(attempts):
        r = rng.randint(1, n)
        vectors = [[random_element(tag, rng) for _ in range(n)] for _ in range(r)]
        module = module_span(tag, vectors)
        if module.freely_generated and is_free(module):
            return module
    return RightSubmodule.zero(tag, n)


def _duality_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str, n: int) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    y = random_free_module(tag, n, rng)
    perp = dual_perp(y)
    ok = (
        perp.dim == n * tag.dim - y.dim
        and is_free(perp)
        and dual_perp(perp).space == y.space
    )
    return ok, {"key": y.key()}


def duality(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """(Y^perp)^perp = Y on random free modules of C^n and H^n."""
    n = int(params.get("n", 3))
    parts = {}
    for kind in params.get("algebras", ["C", "H"]):
        parts[kind] = sampled(_duality_trial, context, field=context["field"], kind=kind, n=n).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def _grassmann_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str, n: int) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    y = random_free_module(tag, n, rng)
    datum = grassmann_iso(y)
    back = grassmann_inverse(datum)
    return back.space == y.space and datum.rank * tag.dim == y.dim, {"key": y.key()}


def grassmann_roundtrip(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """grassmann_inverse(grassmann_iso(E)) = E on random free modules."""
    n = int(params.get("n", 3))
    parts = {}
    for kind in params.get("algebras", ["C", "H"]):
        parts[kind] = sampled(_grassmann_trial, context, field=context["field"], kind=kind, n=n).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}
