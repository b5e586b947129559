# compalg_kit/verify/suites/cubic27_suite.py

from __future__ import annotations

from typing import Any, Dict, Tuple

from compalg_kit.compalg.algebra import algebra
from compalg_kit.cubic27.automorphisms import (
    cyclic_symmetry,
    incidence_automorphism_count,
    is_automorphism,
    preserves_beta,
    row_swap_symmetry,
    transpose_symmetry,
)
from compalg_kit.cubic27.forms import (
    GridTriple,
    evaluate_alpha_scalar,
    evaluate_beta,
    random_sl3,
    random_triple,
    singular_locus_check,
    theta_inverse,
    theta_map,
    triple_action,
)
from compalg_kit.cubic27.incidence import (
    AUTOMORPHISM_COUNT,
    GRID_COUNT,
    PLANE_COUNT,
    PLANES_PER_POINT,
    POSITIVE_PLANES,
    beta_polynomial,
    build_structure,
    check_theta_grids,
    evaluate_alpha,
    is_double_six,
    planes_through,
)
from compalg_kit.cubic27.theta import det_theta_identity, symbolic_values
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK, determinant
from compalg_kit.foundation.polynomial import POLY
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.foundation.tally import Tally, bullet_report
from compalg_kit.jordan.cubic import det3_raw
from compalg_kit.verify.suites import sampled
from compalg_kit.verify.suites.jordan_suite import random_rank_one

Outcome = Tuple[bool, Dict[str, Any]]

DOUBLE_SIXES = {
    "columns_and_b_rows": (
        ("a11", "a21", "a31", "b21", "b22", "b23"),
        ("a12", "a22", "a32", "b11", "b12", "b13"),
    ),
    "rows_and_c_columns": (
        ("a11", "a12", "a13", "c12", "c22", "c32"),
        ("a21", "a22", "a23", "c11", "c21", "c31"),
    ),
}


# ---------- Theta ----------


def det_theta(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """det3(Theta(A, B, C)) = beta(A, B, C) term by term over Z."""
    return det_theta_identity()


def _theta_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    t = random_triple(field, rng)
    image = theta_map(t)
    ok = det3_raw(image) == evaluate_beta(t).value and theta_inverse(image) == t
    return ok, {"t": t.coordinates()}


def theta_values(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """det3 o Theta = beta at random points, and Theta^-1 Theta = id."""
    return sampled(_theta_trial, context, field=context["field"]).as_result()


# ---------- Planes and grids ----------


def grid_condition(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """theta(l1)theta(l2)theta(l3) + theta(m1)theta(m2)theta(m3) = 0 on every 3-grid."""
    structure = build_structure()
    result = check_theta_grids()
    counts = {
        "plane_count": len(structure.planes) == PLANE_COUNT,
        "planes_per_point": all(len(planes_through(p)) == PLANES_PER_POINT for p in structure.points),
        "grid_count": result["grid_count"] == GRID_COUNT,
        "positive_planes": result["positive_planes"] == POSITIVE_PLANES,
    }
    return {**result, "success": result["success"] and all(counts.values()), "counts": counts}


def grid_mutation(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Flipping any single plane sign breaks the grid condition."""
    signs = list(build_structure().signs())
    tally = Tally()
    for i in range(len(signs)):
        mutated = signs[:i] + [-signs[i]] + signs[i + 1 :]
        tally.record(not check_theta_grids(mutated)["success"], {"flipped": i})
    return tally.as_result()


def double_six(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Two known double-sixes, their joint reorderings, and sextuples that must fail."""
    bullets: Dict[str, bool] = {}
    for name, (e, f) in DOUBLE_SIXES.items():
        order = (5, 3, 1, 0, 2, 4)
        bullets[name] = is_double_six(e, f)
        bullets[f"{name}_swapped"] = is_double_six(f, e)
        bullets[f"{name}_joint_reorder"] = is_double_six(
            tuple(e[i] for i in order), tuple(f[i] for i in order)
        )
        bullets[f"{name}_misaligned_rejected"] = not is_double_six(e, f[1:] + f[:1])
    # a11 and a33 share the plane {a11, a22, a33}
    coplanar = ("a11", "a33", "a31", "b21", "b22", "b23")
    bullets["coplanar_rejected"] = not is_double_six(coplanar, DOUBLE_SIXES["columns_and_b_rows"][1])
    return bullet_report(bullets, sextuples={k: [list(e), list(f)] for k, (e, f) in DOUBLE_SIXES.items()})


# ---------- beta ----------


def _invariance_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    t = random_triple(field, rng)
    m, n, p = (random_sl3(field, rng) for _ in range(3))
    zero = MatrixK.zeros(field, 3, 3)
    ok = (
        evaluate_beta(triple_action(m, n, p, t)) == evaluate_beta(t)
        and evaluate_beta(GridTriple(t.a, zero, zero)).value == determinant(t.a)
    )
    return ok, {"t": t.coordinates()}


def beta_invariance(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """beta under (M A N^-1, N B P^-1, P C M^-1) with det = 1, and beta(A, 0, 0) = det A."""
    return sampled(_invariance_trial, context, field=context["field"]).as_result()


def _alpha_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    t = random_triple(field, rng)
    return evaluate_alpha_scalar(t) == evaluate_beta(t), {"t": t.coordinates()}


def alpha_equals_beta(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """The signed plane sum alpha is beta, symbolically and at random points."""
    tally = sampled(_alpha_trial, context, field=context["field"])
    tally.record(evaluate_alpha(symbolic_values(), POLY) == beta_polynomial(), {"symbolic": "alpha != beta"})
    return tally.as_result()


def _singular_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    if index % 10 == 0:
        t = theta_inverse(random_rank_one(algebra("O", field), rng))
        report = singular_locus_check(t)
        ok = report["success"] and report["gradient_zero"]
    else:
        t = random_triple(field, rng)
        report = singular_locus_check(t)
        ok = report["success"]
    return ok, {"t": t.coordinates(), "bullets": report["bullets"]}


def singular_locus(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """grad beta = 0 <=> quadrics <=> rank <= 1; every tenth point is a constructed rank-one point."""
    return sampled(_singular_trial, context, field=context["field"]).as_result()


# ---------- Symmetries ----------


def symmetries(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    transpose, cyclic, swap = transpose_symmetry(), cyclic_symmetry(), row_swap_symmetry()
    return bullet_report(
        {
            "transpose_is_automorphism": is_automorphism(transpose),
            "transpose_preserves_beta": preserves_beta(transpose),
            "cyclic_is_automorphism": is_automorphism(cyclic),
            "cyclic_preserves_beta": preserves_beta(cyclic),
            "row_swap_is_automorphism": is_automorphism(swap),
            "row_swap_changes_beta": not preserves_beta(swap),
        }
    )


def automorphisms(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Meet-preserving permutations of the 27 points; 51840 when the search completes."""
    result = incidence_automorphism_count(float(params.get("budget_seconds", 300)))
    return {
        "success": result.complete and result.count == AUTOMORPHISM_COUNT,
        "count": result.count,
        "complete": result.complete,
        "nodes": result.nodes,
        "expected": AUTOMORPHISM_COUNT,
    }
