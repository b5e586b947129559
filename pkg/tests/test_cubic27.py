# tests/test_cubic27.py

import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.cubic27.automorphisms import (
    AutomorphismCount,
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
    POINT_LABELS,
    beta_polynomial,
    build_structure,
    check_theta_grids,
    enumerate_3grids,
    evaluate_alpha,
    grid_points,
    incidence_payload,
    is_double_six,
    meets,
    planes_through,
)
from compalg_kit.cubic27.theta import det_theta_identity, symbolic_values
from compalg_kit.errors import PreconditionError, ShapeError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK, determinant
from compalg_kit.foundation.polynomial import POLY
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.jordan.cubic import det3_raw

F7 = FieldContext.prime(7)
Q = FieldContext.rationals()

COLUMNS = ("a11", "a21", "a31", "b21", "b22", "b23")
B_ROWS = ("a12", "a22", "a32", "b11", "b12", "b13")


# ---------- Incidence ----------


def test_planes_and_points():
    structure = build_structure()
    assert len(structure.points) == 27
    assert len(structure.planes) == 45
    assert sum(1 for s in structure.signs() if s > 0) == 9
    for p in POINT_LABELS:
        assert len(planes_through(p)) == 5
        assert len(structure.neighbours(p)) == 10


def test_meet_relation():
    assert meets("a11", "a22")
    assert meets("a11", "b11")
    assert not meets("a11", "a12")
    assert not meets("a11", "a11")
    with pytest.raises(ShapeError):
        meets("a11", "d11")


def test_grids():
    grids = enumerate_3grids()
    assert len(grids) == GRID_COUNT
    assert len(set(grid_points(grids[0]))) == 9
    assert check_theta_grids()["success"]


def test_single_sign_flip_breaks_the_grid_condition():
    signs = list(build_structure().signs())
    signs[0] = -signs[0]
    assert not check_theta_grids(signs)["success"]
    with pytest.raises(ShapeError):
        check_theta_grids(signs[:-1])


def test_double_six():
    assert is_double_six(COLUMNS, B_ROWS)
    assert is_double_six(B_ROWS, COLUMNS)
    assert not is_double_six(COLUMNS, B_ROWS[1:] + B_ROWS[:1])
    assert not is_double_six(("a11", "a33", "a31", "b21", "b22", "b23"), B_ROWS)


def test_double_six_preconditions():
    with pytest.raises(ShapeError):
        is_double_six(COLUMNS[:5], B_ROWS)
    with pytest.raises(PreconditionError):
        is_double_six(COLUMNS, COLUMNS)


def test_incidence_payload():
    payload = incidence_payload({"command": "export-incidence"})
    assert payload.points == list(POINT_LABELS)
    assert len(payload.planes) == 45
    assert {p.sign for p in payload.planes} == {1, -1}


# ---------- Forms ----------


def test_alpha_is_beta_symbolically():
    assert evaluate_alpha(symbolic_values(), POLY) == beta_polynomial()
    assert len(beta_polynomial()) == 45


def test_det_theta_identity():
    report = det_theta_identity()
    assert report["success"], report["mismatches"]
    assert report["det_theta_terms"] == report["beta_terms"] == 45


@pytest.mark.parametrize("ctx", [F7, Q])
def test_theta_values_and_inverse(ctx):
    for i in range(10):
        t = random_triple(ctx, trial_rng(0, "theta", i))
        image = theta_map(t)
        assert det3_raw(image) == evaluate_beta(t).value
        assert theta_inverse(image) == t
        assert evaluate_alpha_scalar(t) == evaluate_beta(t)


def test_beta_invariance():
    zero = MatrixK.zeros(F7, 3, 3)
    for i in range(10):
        rng = trial_rng(1, "invariance", i)
        t = random_triple(F7, rng)
        m, n, p = (random_sl3(F7, rng) for _ in range(3))
        assert determinant(m) == 1
        assert evaluate_beta(triple_action(m, n, p, t)) == evaluate_beta(t)
        assert evaluate_beta(GridTriple(t.a, zero, zero)).value == determinant(t.a)


def test_singular_locus_at_zero_and_random_points():
    zero_report = singular_locus_check(GridTriple.zero(F7))
    assert zero_report["success"] and zero_report["gradient_zero"]
    for i in range(10):
        assert singular_locus_check(random_triple(F7, trial_rng(2, "singular", i)))["success"]


def test_grid_triples_need_3x3():
    with pytest.raises(ShapeError):
        GridTriple(MatrixK.zeros(F7, 2, 2), MatrixK.zeros(F7, 3, 3), MatrixK.zeros(F7, 3, 3))


# ---------- Symmetries ----------


def test_symmetries():
    for perm in (transpose_symmetry(), cyclic_symmetry()):
        assert is_automorphism(perm) and preserves_beta(perm)
    swap = row_swap_symmetry()
    assert is_automorphism(swap)
    assert not preserves_beta(swap)


def test_automorphism_budget_returns_partial_count():
    result = incidence_automorphism_count(0.0)
    assert isinstance(result, AutomorphismCount)
    assert not result.complete
    assert result.count < AUTOMORPHISM_COUNT


@pytest.mark.slow
def test_automorphism_count():
    result = incidence_automorphism_count(600.0)
    assert result.complete
    assert result.count == AUTOMORPHISM_COUNT
