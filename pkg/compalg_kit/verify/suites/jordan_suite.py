# compalg_kit/verify/suites/jordan_suite.py

from __future__ import annotations

import random
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Tuple

from compalg_kit.compalg.algebra import AlgebraTag, Coords, algebra, random_element, random_nonzero, unit_e
from compalg_kit.foundation.codec import HermitianPayload, load_payload
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.foundation.tally import Tally
from compalg_kit.jordan.cubic import adjoint, det3_raw
from compalg_kit.jordan.hermitian import (
    HermitianMatrix,
    coordinate_dim,
    embed_quaternion,
    enumerate_hermitian,
    hermitian_from_payload,
    trace_form_raw,
)
from compalg_kit.jordan.octonion_plane import (
    classify_rank_one_octonion,
    null_plane_preimage_search,
    null_plane_search,
    on_quadrics,
    sum_of_rank_ones_check,
    x0_matrix,
)
from compalg_kit.jordan.operators import u_operator, u_operator_matrix
from compalg_kit.jordan.rank_one import jordan_rank_one, l_rank_tests, minors_rank_one_3, square_test
from compalg_kit.jordan.veronese import (
    has_veronese_preimage,
    indeterminacy_member_raw,
    octonion_scaling_witness,
    projective_scaling_holds,
    veronese_images,
    veronese_raw,
)
from compalg_kit.verify.suites import sampled

DATA_DIR = Path(__file__).resolve().parents[2] / "data"
X0_WITNESS = DATA_DIR / "x0_witness.json"

Outcome = Tuple[bool, Dict[str, Any]]


def random_hermitian(n: int, tag: AlgebraTag, rng: random.Random) -> HermitianMatrix:
    ring = tag.context
    return HermitianMatrix.from_coordinates(
        n, tag, [ring.random(rng) for _ in range(coordinate_dim(n, tag))]
    )


def associative_triple(tag: AlgebraTag, rng: random.Random) -> List[Coords]:
    """z1, z2 random and z3 in the subalgebra they generate."""
    ring = tag.context
    z1, z2 = random_element(tag, rng), random_element(tag, rng)
    parts = [tag.one(), z1, z2, tag.mul(z1, z2)]
    z3 = tag.zero()
    for p in parts:
        z3 = tag.add(z3, tag.scale(ring.random(rng), p))
    order = [z1, z2, z3]
    rng.shuffle(order)
    return order


def random_rank_one(tag: AlgebraTag, rng: random.Random) -> HermitianMatrix:
    """A nonzero nu_2 image in H_3(A)."""
    while True:
        image = veronese_raw(tag, associative_triple(tag, rng))
        if not image.is_zero():
            return image


# ---------- Rank-one equivalences ----------


def rank_one_equivalences(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """
    Exhaustive over H_n(A) on a small prime field: Jordan rank one against
    the minors (n = 3), rank L_A, nu_2 preimages and A^2 = tr(A) A (n = 3).

    In characteristic 2 the square test only implies rank one one way; the
    converse failures are counted, not failed.
    """
    ctx = FieldContext.prime(int(params.get("p", 2)))
    tag = algebra(str(params.get("alg", "c")).upper(), ctx)
    n = int(params.get("n", 3))
    images = veronese_images(tag, n)
    tally = Tally()
    census: Counter = Counter()
    for a in enumerate_hermitian(n, tag):
        if a.is_zero():
            continue
        r = jordan_rank_one(a)
        census["rank_one" if r else "higher_rank"] += 1
        bullets = {
            "l_rank": l_rank_tests(a)["success"],
            "veronese_preimage": has_veronese_preimage(a, images) == r,
        }
        if n == 3:
            bullets["minors"] = minors_rank_one_3(a) == r
            sq = square_test(a)
            bullets["square_forward"] = sq or not r
            if ctx.characteristic != 2:
                bullets["square_converse"] = r or not sq
            elif sq and not r:
                census["square_converse_failures"] += 1
        tally.record(all(bullets.values()), {"A": a.coordinates(), "bullets": bullets})
    return tally.as_result(algebra=tag.kind, n=n, field=ctx.label, census=dict(sorted(census.items())))


def _rank_one_random_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    a = random_rank_one(tag, rng) if index % 2 else random_hermitian(3, tag, rng)
    if a.is_zero():
        return True, {"A": a.coordinates()}
    r = jordan_rank_one(a)
    sq = square_test(a)
    bullets = {
        "minors": minors_rank_one_3(a) == r,
        "l_rank": l_rank_tests(a)["success"],
        "square_forward": sq or not r,
    }
    # the converse is only asserted outside characteristic 2 and 3
    if field.characteristic not in (2, 3):
        bullets["square_converse"] = r or not sq
    return all(bullets.values()), {"A": a.coordinates(), "rank_one": r, "bullets": bullets}


def rank_one_random(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """
    Sampled H_3(A), every other trial a nu_2 image: minors, rank L_A and the
    square test against jordan_rank_one. params["p"] pins a prime field,
    otherwise the run's field is used.
    """
    field = FieldContext.prime(int(params["p"])) if "p" in params else context["field"]
    parts = {}
    for kind in params.get("algebras", ["C", "H"]):
        parts[kind] = sampled(_rank_one_random_trial, context, field=field, kind=kind).as_result()
    return {"success": all(p["success"] for p in parts.values()), "field": field.label, "parts": parts}


# ---------- Cubic norm and U-operator identities ----------


def _fundamental_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    a, b = random_hermitian(3, tag, rng), random_hermitian(3, tag, rng)
    lhs = u_operator_matrix(u_operator(a, b))
    ua = u_operator_matrix(a)
    rhs = ua.mul(u_operator_matrix(b)).mul(ua)
    return lhs == rhs, {"A": a.coordinates(), "B": b.coordinates()}


def fundamental_identity(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """U_{U_A B} = U_A U_B U_A as operator matrices on H_3(A)."""
    parts = {}
    for kind in params.get("algebras", ["C", "H", "O"]):
        parts[kind] = sampled(_fundamental_trial, context, field=context["field"], kind=kind).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def _adjoint_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    ring = tag.context
    a = random_hermitian(3, tag, rng)
    d = det3_raw(a)
    sharp = adjoint(a)
    ok = adjoint(sharp) == a.scale(d) and trace_form_raw(a, sharp) == ring.mul(ring.from_int(3), d)
    return ok, {"A": a.coordinates()}


def adjoint_identities(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """(A^#)^# = det(A) A and T(A, A^#) = 3 det(A)."""
    parts = {}
    for kind in params.get("algebras", ["C", "H", "O"]):
        parts[kind] = sampled(_adjoint_trial, context, field=context["field"], kind=kind).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def _rank_one_sum_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra("O", field)
    a, b = random_rank_one(tag, rng), random_rank_one(tag, rng)
    ok = jordan_rank_one(a) and on_quadrics(b) and sum_of_rank_ones_check(a, b)
    return ok, {"A": a.coordinates(), "B": b.coordinates()}


def rank_one_sums(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Veronese images of associative triples are rank one and det3(A + B) = 0."""
    return sampled(_rank_one_sum_trial, context, field=context["field"]).as_result()


# ---------- X0 and X1 ----------


def x0_witness(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """The shipped null-plane matrix lies on the quadrics, is X0 and has no nu_2 preimage."""
    path = Path(params["path"]) if params.get("path") else X0_WITNESS
    a = hermitian_from_payload(load_payload(HermitianPayload, path))
    verdict = classify_rank_one_octonion(a)
    preimage = null_plane_preimage_search(a)
    searched = null_plane_search(a.context)
    searched_class = None
    if searched is not None:
        searched_class = classify_rank_one_octonion(x0_matrix(a.tag, *searched))["class"]
    bullets = {
        "on_quadrics": on_quadrics(a),
        "classified_x0": verdict["class"] == "X0" and verdict["verified"],
        "no_veronese_preimage": preimage is None,
        "search_finds_null_plane": searched_class == "X0",
    }
    return {
        "success": all(bullets.values()),
        "bullets": bullets,
        "field": a.context.label,
        "null_plane": verdict["witness"].get("null_plane"),
        "searched_plane": [list(v) for v in searched] if searched else None,
    }


def _x1_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra("O", field)
    a = random_rank_one(tag, rng).scale(field.random_nonzero(rng))
    verdict = classify_rank_one_octonion(a)
    ok = verdict["class"] == "X1" and verdict["verified"]
    return ok, {"A": a.coordinates(), "case": verdict["case"]}


def x1_classification(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Scaled nu_2 images classify as X1 and the witness maps back onto A."""
    return sampled(_x1_trial, context, field=context["field"]).as_result()


def scaling_witness(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """A concrete octonionic (z, lambda) where nu_2(z lambda) is not proportional to nu_2(z)."""
    ctx = FieldContext.prime(int(params.get("p", 3)))
    witness = octonion_scaling_witness(ctx)
    return {"success": witness is not None, "field": ctx.label, "witness": witness}


def _scaling_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    zs = [random_element(tag, rng) for _ in range(3)]
    lam = random_nonzero(tag, rng)
    return projective_scaling_holds(tag, zs, lam), {"z": zs, "lambda": lam}


def associative_scaling(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """nu_2(z lambda) = Q(lambda) nu_2(z) for C and H."""
    parts = {}
    for kind in params.get("algebras", ["C", "H"]):
        parts[kind] = sampled(_scaling_trial, context, field=context["field"], kind=kind).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


# ---------- Indeterminacy locus ----------


def _indeterminacy_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    zs = [random_element(tag, rng) for _ in range(3)]
    if index % 2:
        # every z_t e is killed by f
        e = unit_e(tag)
        zs = [tag.mul(z, e) for z in zs]
    member = indeterminacy_member_raw(tag, zs)
    ok = member == veronese_raw(tag, zs).is_zero() and (member or not index % 2)
    return ok, {"z": zs, "member": member}


def indeterminacy(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """lambda -> z lambda has a kernel <=> nu_2(z) = 0; odd trials are built inside the locus."""
    parts = {}
    for kind in params.get("algebras", ["C", "H"]):
        parts[kind] = sampled(_indeterminacy_trial, context, field=context["field"], kind=kind).as_result()
    return {"success": all(p["success"] for p in parts.values()), "parts": parts}


def _embedding_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    quaternions, octonions = algebra("H", field), algebra("O", field)
    a, b = random_hermitian(3, quaternions, rng), random_hermitian(3, quaternions, rng)
    lifted = u_operator(embed_quaternion(a, octonions), embed_quaternion(b, octonions))
    return lifted == embed_quaternion(u_operator(a, b), octonions), {"A": a.coordinates(), "B": b.coordinates()}


def octonion_u_embedding(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """T(A, B) A - A^# x B equals ABA on matrices with quaternionic entries."""
    return sampled(_embedding_trial, context, field=context["field"]).as_result()
