# tests/test_classical.py

import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.classical.models import (
    ClassicalModel,
    classical_from_payload,
    from_hermitian_c,
    is_structure_element,
    matrix_rank_characterization,
    random_carrier_element,
    random_group_element,
    random_rank_one,
    rank_one_classical,
    structure_action,
    trace_classical,
)
from compalg_kit.compalg.algebra import algebra
from compalg_kit.errors import CodecError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import ClassicalPayload, parse_payload
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.jordan.hermitian import HermitianMatrix
from compalg_kit.jordan.rank_one import jordan_rank_one

F5 = FieldContext.prime(5)
MODELS = [(1, 3), (2, 3), (4, 2)]


@pytest.mark.parametrize("a,n", MODELS)
def test_base_point_is_in_carrier_and_not_rank_one(a, n):
    model = ClassicalModel(a, n, F5)
    base = model.base_point
    assert model.in_carrier(base)
    assert not rank_one_classical(model, base)
    assert not matrix_rank_characterization(model, base)


@pytest.mark.parametrize("a,n", MODELS)
def test_trace_form_of_base_point_is_n(a, n):
    model = ClassicalModel(a, n, F5)
    base = model.base_point
    # for a = 4 this is half of tr(I I^-1 I I^-1) = 2n
    assert trace_classical(model, base, base) == F5.from_int(n)


@pytest.mark.parametrize("a,n", MODELS)
def test_rank_one_constructions(a, n):
    model = ClassicalModel(a, n, F5)
    for i in range(10):
        m = random_rank_one(model, trial_rng(0, f"rank_one_{a}", i))
        assert rank_one_classical(model, m)
        assert matrix_rank_characterization(model, m)


@pytest.mark.parametrize("a,n", MODELS)
def test_characterizations_agree_on_random_elements(a, n):
    model = ClassicalModel(a, n, F5)
    for i in range(20):
        m = random_carrier_element(model, trial_rng(1, f"carrier_{a}", i))
        if m.is_zero():
            continue
        assert rank_one_classical(model, m) == matrix_rank_characterization(model, m)


@pytest.mark.parametrize("a,n", [(1, 2), (2, 2), (4, 2)])
def test_structure_group_preserves_rank_one(a, n):
    model = ClassicalModel(a, n, F5)
    for i in range(3):
        rng = trial_rng(2, f"structure_{a}", i)
        g = random_group_element(model, rng)
        assert is_structure_element(model, g)
        moved = structure_action(model, g, random_rank_one(model, rng))
        assert rank_one_classical(model, moved)


def test_complex_hermitian_matrices_are_full_matrices():
    tag = algebra("C", F5)
    e11 = HermitianMatrix.elementary(3, tag, 0)
    ident = HermitianMatrix.identity(3, tag)
    model = ClassicalModel(2, 3, F5)
    assert from_hermitian_c(e11) == MatrixK.from_rows(F5, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert rank_one_classical(model, from_hermitian_c(e11)) == jordan_rank_one(e11)
    assert rank_one_classical(model, from_hermitian_c(ident)) == jordan_rank_one(ident)


def test_carrier_membership_is_enforced():
    model = ClassicalModel(1, 2, F5)
    lopsided = MatrixK.from_rows(F5, [[1, 2], [0, 1]])
    with pytest.raises(PreconditionError):
        rank_one_classical(model, lopsided)
    with pytest.raises(PreconditionError):
        rank_one_classical(model, MatrixK.zeros(F5, 2, 2))


def test_model_shape_errors():
    with pytest.raises(ShapeError):
        ClassicalModel(3, 2, F5)
    model = ClassicalModel(2, 2, F5)
    with pytest.raises(ShapeError):
        structure_action(model, MatrixK.identity(F5, 2), model.base_point)


def test_classical_payload():
    payload = parse_payload(
        ClassicalPayload,
        {"model": {"a": 4, "n": 1}, "matrix": {"field": "fp", "p": 5, "rows": [[0, 1], [4, 0]]}},
    )
    model, m = classical_from_payload(payload)
    assert model.size == 2
    assert model.in_carrier(m)
    assert matrix_rank_characterization(model, m)
    with pytest.raises(CodecError):
        parse_payload(ClassicalPayload, {"model": {"a": 3, "n": 1}, "matrix": {"field": "q", "rows": []}})
