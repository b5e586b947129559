# compalg_kit/verify/suites/classical_suite.py

from __future__ import annotations

import itertools
from typing import Any, Dict, Iterator, List, Tuple

from compalg_kit.classical.models import (
    ClassicalModel,
    carrier_basis,
    from_hermitian_c,
    is_structure_element,
    matrix_rank_characterization,
    random_carrier_element,
    random_group_element,
    random_rank_one,
    rank_one_classical,
    structure_action,
)
from compalg_kit.compalg.algebra import algebra
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.foundation.tally import Tally
from compalg_kit.jordan.hermitian import HermitianMatrix, coordinate_dim, enumerate_hermitian
from compalg_kit.jordan.rank_one import is_alternating, jordan_rank_one, scorza_map
from compalg_kit.verify.suites import sampled
from compalg_kit.verify.suites.jordan_suite import random_hermitian, random_rank_one as random_hermitian_rank_one

Outcome = Tuple[bool, Dict[str, Any]]

DEFAULT_MODELS: List[List[int]] = [[1, 3], [2, 3], [4, 2]]


def _models(params: Dict[str, Any]) -> List[Tuple[int, int]]:
    return [(int(a), int(n)) for a, n in params.get("models", DEFAULT_MODELS)]


def _structure_trial(index: int, *, seed: int, label: str, field: FieldContext, a: int, n: int) -> Outcome:
    rng = trial_rng(seed, label, index)
    model = ClassicalModel(a, n, field)
    g = random_group_element(model, rng)
    m = random_rank_one(model, rng)
    moved = structure_action(model, g, m)
    ok = (
        is_structure_element(model, g)
        and rank_one_classical(model, moved)
        and matrix_rank_characterization(model, moved)
    )
    return ok, {"A": m.rows}


def structure_invariance(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """U_{gA} = g U_A g* on a basis, and g keeps rank-one points rank one."""
    parts = {}
    for a, n in _models(params):
        tally = sampled(_structure_trial, context, field=context["field"], a=a, n=n)
        parts[f"V{n}_{a}"] = tally.as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def _rank_trial(index: int, *, seed: int, label: str, field: FieldContext, a: int, n: int) -> Outcome:
    rng = trial_rng(seed, label, index)
    model = ClassicalModel(a, n, field)
    m = random_rank_one(model, rng) if index % 2 == 0 else random_carrier_element(model, rng)
    if m.is_zero():
        return True, {}
    return rank_one_classical(model, m) == matrix_rank_characterization(model, m), {"A": m.rows}


def rank_characterization(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """U_A B = T(A, B) A for all B  <=>  matrix rank 1 (rank 2 when a = 4)."""
    parts = {}
    for a, n in _models(params):
        parts[f"V{n}_{a}"] = sampled(_rank_trial, context, field=context["field"], a=a, n=n).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def hermitian_c_oracle(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Exhaustive over H_n(C): Jordan rank one iff the V^n_2 image has matrix rank one."""
    ctx = FieldContext.prime(int(params.get("p", 2)))
    n = int(params.get("n", 3))
    tag = algebra("C", ctx)
    model = ClassicalModel(2, n, ctx)
    tally = Tally()
    for h in enumerate_hermitian(n, tag):
        if h.is_zero():
            continue
        image = from_hermitian_c(h)
        r = jordan_rank_one(h)
        ok = r == (image.rank() == 1) and r == rank_one_classical(model, image)
        tally.record(ok, {"A": h.coordinates()})
    return tally.as_result(field=ctx.label, n=n)


def _scorza_trial(index: int, *, seed: int, label: str, field: FieldContext, n: int) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra("H", field)
    model = ClassicalModel(4, n, field)
    a = random_hermitian_rank_one(tag, rng) if index % 2 == 0 else random_hermitian(n, tag, rng)
    if a.is_zero():
        return True, {}
    m = scorza_map(a)
    ok = is_alternating(m) and jordan_rank_one(a) == rank_one_classical(model, m)
    return ok, {"A": a.coordinates()}


def scorza_agreement(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """H_3(H) -> V^3_4: alternating images, Id onto the base point, rank one preserved."""
    n = 3
    field = context["field"]
    tally = sampled(_scorza_trial, context, field=field, n=n)
    identity_ok = scorza_map(HermitianMatrix.identity(n, algebra("H", field))) == ClassicalModel(4, n, field).base_point
    tally.record(identity_ok, {"identity": "scorza_map(Id) != I"})
    return tally.as_result()


def _carrier_elements(model: ClassicalModel) -> Iterator[MatrixK]:
    ctx = model.context
    basis = carrier_basis(model)
    for coeffs in itertools.product(range(ctx.order), repeat=len(basis)):
        m = MatrixK.zeros(ctx, model.size, model.size)
        for c, b in zip(coeffs, basis):
            if c:
                m = m.add(b.scale(c))
        yield m


def carrier_exhaustive(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Over a whole carrier on F_p: the Jordan predicate agrees with the matrix-rank one."""
    ctx = FieldContext.prime(int(params.get("p", 2)))
    model = ClassicalModel(int(params.get("a", 4)), int(params.get("n", 2)), ctx)
    tally = Tally()
    for m in _carrier_elements(model):
        if m.is_zero():
            continue
        tally.record(rank_one_classical(model, m) == matrix_rank_characterization(model, m), {"A": m.rows})
    return tally.as_result(field=ctx.label, model=f"V{model.n}_{model.a}")


def scorza_exhaustive(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """All of H_n(H) over F_p: images alternating and pairwise distinct, rank one matched."""
    ctx = FieldContext.prime(int(params.get("p", 2)))
    n = int(params.get("n", 2))
    tag = algebra("H", ctx)
    model = ClassicalModel(4, n, ctx)
    tally = Tally()
    images = set()
    for h in enumerate_hermitian(n, tag):
        m = scorza_map(h)
        images.add(m.rows)
        ok = is_alternating(m)
        if not h.is_zero():
            ok = ok and jordan_rank_one(h) == rank_one_classical(model, m)
        tally.record(ok, {"A": h.coordinates()})
    expected = ctx.order ** coordinate_dim(n, tag)
    tally.record(len(images) == expected, {"distinct_images": len(images), "expected": expected})
    return tally.as_result(field=ctx.label, n=n)
