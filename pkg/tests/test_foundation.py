# tests/test_foundation.py

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.errors import FieldError, ShapeError
from compalg_kit.foundation.fields import MAX_PRIME, FieldContext, Scalar, field_arithmetic
from compalg_kit.foundation.linalg import (
    MatrixK,
    SubspaceK,
    determinant,
    inverse,
    kernel_image,
    rref,
    solve,
)
from compalg_kit.foundation.polynomial import POLY, Polynomial
from compalg_kit.foundation.sampling import run_trials, trial_rng
from compalg_kit.foundation.tally import Tally, to_jsonable

F5 = FieldContext.prime(5)
Q = FieldContext.rationals()

residues = st.integers(min_value=0, max_value=6)


# ---------- Fields ----------


def test_context_equality_is_kind_and_characteristic():
    assert FieldContext.prime(7) == FieldContext.parse("fp", 7)
    assert FieldContext.prime(7) != FieldContext.prime(5)
    assert Q == FieldContext.parse("q")


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91])
def test_non_primes_are_rejected(p):
    with pytest.raises(FieldError):
        FieldContext.prime(p)


def test_prime_bound():
    with pytest.raises(FieldError):
        FieldContext.prime(65537)
    assert FieldContext.prime(65521).characteristic < MAX_PRIME


def test_fp_requires_p():
    with pytest.raises(FieldError):
        FieldContext.parse("fp")


def test_scalar_context_mismatch():
    with pytest.raises(FieldError):
        Scalar.of(F5, 1) + Scalar.of(FieldContext.prime(7), 1)


def test_division_by_zero():
    with pytest.raises(FieldError):
        field_arithmetic(Scalar.of(F5, 3), Scalar.of(F5, 0), "div")


def test_fraction_coercion_into_fp():
    assert F5.coerce(Fraction(1, 2)) == 3
    with pytest.raises(FieldError):
        F5.coerce(Fraction(1, 5))
    assert Q.coerce("6/4") == Fraction(3, 2)


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_axioms(a, b, c):
    x, y, z = Scalar.of(Q, a), Scalar.of(Q, b), Scalar.of(Q, c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not x.is_zero():
        assert (x * x.inverse()).value == 1


@given(residues, residues, residues)
def test_f7_field_axioms(a, b, c):
    f7 = FieldContext.prime(7)
    x, y, z = Scalar.of(f7, a), Scalar.of(f7, b), Scalar.of(f7, c)
    assert (x * y) * z == x * (y * z)
    assert x * (y - z) == x * y - x * z
    assert (x - x).is_zero()
    if not x.is_zero():
        assert (y / x) * x == y


# ---------- Matrices and subspaces ----------


def test_rank_kernel_image():
    m = MatrixK.from_rows(F5, [[1, 2, 3], [2, 4, 0]])
    kernel, image = kernel_image(m)
    assert m.rank() == 2
    assert kernel.dim == 1
    assert image.dim == 2
    assert not any(m.apply(kernel.basis[0]))


@given(
    st.sampled_from([F5, Q]),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=5),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=20, max_size=20),
)
def test_kernel_and_image_dimensions_add_up(ctx, nrows, ncols, entries):
    m = MatrixK.from_rows(ctx, [entries[r * ncols : (r + 1) * ncols] for r in range(nrows)])
    kernel, image = kernel_image(m)
    assert kernel.dim + image.dim == ncols
    assert image.dim == m.rank()
    for v in kernel.basis:
        assert all(ctx.is_zero(x) for x in m.apply(v))


def test_rref_is_canonical():
    a = MatrixK.from_rows(F5, [[0, 2, 4], [1, 1, 1]])
    b = MatrixK.from_rows(F5, [[1, 3, 0], [0, 1, 2]])
    assert rref(a) == rref(b)


def test_determinant_and_inverse():
    m = MatrixK.from_rows(Q, [[2, 1], [7, 4]])
    assert determinant(m) == 1
    assert m.mul(inverse(m)) == MatrixK.identity(Q, 2)
    singular = MatrixK.from_rows(Q, [[1, 2], [2, 4]])
    with pytest.raises(FieldError):
        inverse(singular)


def test_solve():
    m = MatrixK.from_rows(F5, [[1, 1], [0, 1]])
    x = solve(m, (3, 2))
    assert m.apply(x) == (3, 2)
    assert solve(MatrixK.from_rows(F5, [[1, 1], [1, 1]]), (1, 2)) is None


def test_ragged_rows():
    with pytest.raises(ShapeError):
        MatrixK.from_rows(F5, [[1, 2], [3]])


def test_subspace_lattice():
    e = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
    u = SubspaceK.span(F5, e[:2], 4)
    v = SubspaceK.span(F5, e[1:], 4)
    assert u.sum(v).dim == 3
    assert u.intersect(v) == SubspaceK.span(F5, [e[1]], 4)
    assert u.sum(v).contains(u)
    assert u.coordinates((2, 3, 0, 0)) == (2, 3)
    with pytest.raises(ShapeError):
        u.coordinates((0, 0, 1, 0))


def test_subspace_ambient_mismatch():
    with pytest.raises(ShapeError):
        SubspaceK.zero(F5, 3).sum(SubspaceK.zero(F5, 4))


# ---------- Polynomials ----------


def test_polynomial_ring_identities():
    x, y = POLY.variable("x"), POLY.variable("y")
    lhs = (x + y) * (x - y)
    assert lhs == x * x - y * y
    assert lhs.derivative("x") == x.scale(2)
    assert lhs.degree() == 2 and lhs.is_homogeneous(2)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_polynomial_evaluation_matches_field(a, b):
    x, y = POLY.variable("x"), POLY.variable("y")
    p = x * x * y - Polynomial.constant(3) * y + x
    value = p.evaluate({"x": Fraction(a), "y": Fraction(b)}, Q)
    assert value == a * a * b - 3 * b + a


# ---------- Sampling and tallies ----------


def test_trial_rng_is_counter_based():
    first = [trial_rng(7, "label", i).random() for i in range(5)]
    again = [trial_rng(7, "label", i).random() for i in reversed(range(5))]
    assert first == list(reversed(again))
    assert trial_rng(7, "other", 0).random() != first[0]


def test_run_trials_keeps_order():
    assert run_trials(lambda i: i * i, 6) == [0, 1, 4, 9, 16, 25]


def test_tally_keeps_first_counterexamples():
    tally = Tally(keep=2).extend([True, (False, {"i": 1}), (False, {"i": 2}), (False, {"i": 3})])
    result = tally.as_result()
    assert result["success"] is False
    assert result["checked"] == 4 and result["failed"] == 3
    assert result["counterexamples"] == [{"i": 1}, {"i": 2}]


def test_to_jsonable_fractions():
    assert to_jsonable({"x": (Fraction(1, 2), 3)}) == {"x": ["1/2", 3]}
