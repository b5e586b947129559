# tests/test_compalg.py

import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.compalg.algebra import (
    CompElement,
    algebra,
    enumerate_elements,
    mul_operator,
    random_isotropic,
    x0,
)
from compalg_kit.compalg.checks import (
    annihilator_pair,
    check_composition_general,
    check_triality,
    composition_law_exhaustive,
    injectivity_sweep,
    x0_display,
)
from compalg_kit.errors import FieldError, PreconditionError, ShapeError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.sampling import trial_rng

F2 = FieldContext.prime(2)
F5 = FieldContext.prime(5)
F7 = FieldContext.prime(7)

octonion_coords = st.lists(st.integers(0, 6), min_size=8, max_size=8)


# ---------- Composition law ----------


@settings(max_examples=200)
@given(octonion_coords, octonion_coords)
def test_octonion_norm_is_multiplicative(a, b):
    tag = algebra("O", F7)
    x, y = tag.from_ints(a), tag.from_ints(b)
    assert tag.norm(tag.mul(x, y)) == F7.mul(tag.norm(x), tag.norm(y))
    assert tag.conj(tag.mul(x, y)) == tag.mul(tag.conj(y), tag.conj(x))


@given(octonion_coords, octonion_coords)
def test_octonions_are_alternative(a, b):
    tag = algebra("O", F7)
    x, y = tag.from_ints(a), tag.from_ints(b)
    assert tag.is_zero(tag.associator(x, x, y))
    assert tag.is_zero(tag.associator(y, x, x))


def test_quaternions_associative_octonions_not():
    h, o = algebra("H", F5), algebra("O", F5)
    assert all(h.is_zero(h.associator(*t)) for t in itertools.product(h.basis(), repeat=3))
    assert any(not o.is_zero(o.associator(*t)) for t in itertools.product(o.basis(), repeat=3))


@pytest.mark.parametrize("kind", ["R", "C", "H"])
def test_composition_law_exhaustive_over_f2(kind):
    result = composition_law_exhaustive(algebra(kind, F2))
    assert result["success"], result
    assert result["checked"] == (2 ** algebra(kind, F2).dim) ** 2


def test_one_is_neutral_and_real():
    tag = algebra("O", F5)
    x = tag.from_ints((1, 2, 3, 4, 0, 1, 2, 3))
    assert tag.mul(tag.one(), x) == x == tag.mul(x, tag.one())
    assert tag.re(tag.one()) == 2


# ---------- Isotropic images ----------


def test_x0_images():
    tag = algebra("O", F5)
    z = CompElement(tag, x0(tag))
    report = check_composition_general(z)
    assert report["success"], report
    assert report["dims"] == {"left": 4, "right": 4, "kernel": 4}
    assert mul_operator(z, "left").rank() == 4


def test_invertible_element_has_full_images():
    tag = algebra("H", F5)
    report = check_composition_general(CompElement(tag, tag.one()))
    assert report["success"]
    assert report["bullets"]["left_image_full"]


def test_x0_display_patterns():
    assert x0_display(F5)["success"]


@pytest.mark.parametrize("kind", ["C", "H", "O"])
def test_random_isotropic_images(kind):
    tag = algebra(kind, F5)
    for i in range(25):
        z = random_isotropic(tag, trial_rng(3, "images", i))
        assert check_composition_general(CompElement(tag, z))["success"]


def test_annihilator_pair_on_x0():
    tag = algebra("O", F5)
    assert annihilator_pair(tag, x0(tag), x0(tag))


def test_annihilator_requires_isotropic():
    tag = algebra("O", F5)
    with pytest.raises(PreconditionError):
        annihilator_pair(tag, tag.one(), x0(tag))


def test_triality_bullets():
    tag = algebra("O", F5)
    base = CompElement(tag, x0(tag))
    report = check_triality(base, base)
    assert report["success"], report
    assert report["dims"] == {"LL": 4, "RR": 4, "LR": 1}
    for i in range(25):
        rng = trial_rng(11, "triality", i)
        x = CompElement(tag, random_isotropic(tag, rng))
        y = CompElement(tag, random_isotropic(tag, rng))
        assert check_triality(x, y)["success"]


def test_triality_rejects_quaternions():
    tag = algebra("H", F5)
    e = CompElement(tag, tag.from_ints((1, 0, 0, 0)))
    with pytest.raises(PreconditionError):
        check_triality(e, e)


def test_injectivity_over_f2():
    assert injectivity_sweep(algebra("O", F2))["success"]


# ---------- Preconditions ----------


def test_real_line_has_no_isotropic_images():
    tag = algebra("R", F5)
    with pytest.raises(PreconditionError):
        check_composition_general(CompElement(tag, tag.one()))


def test_zero_divisor_has_no_inverse():
    tag = algebra("O", F5)
    with pytest.raises(PreconditionError):
        tag.inverse(x0(tag))


def test_wrong_coordinate_count():
    with pytest.raises(ShapeError):
        CompElement(algebra("H", F5), (1, 2, 3))


def test_enumeration_needs_finite_field():
    with pytest.raises(FieldError):
        next(iter(enumerate_elements(algebra("C", FieldContext.rationals()))))
