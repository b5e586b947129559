# tests/test_jordan.py

import itertools
import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.compalg.algebra import algebra, random_element, unit_e
from compalg_kit.errors import NonAssociativeError, PreconditionError, ShapeError
from compalg_kit.foundation.codec import HermitianPayload, dump_payload, load_payload
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.jordan.cubic import adjoint, cross, det3, det3_raw
from compalg_kit.jordan.hermitian import (
    HermitianMatrix,
    coordinate_dim,
    embed_quaternion,
    enumerate_hermitian,
    hermitian_from_payload,
    hermitian_to_payload,
    tr,
)
from compalg_kit.jordan.octonion_plane import (
    classify_payload,
    classify_rank_one_octonion,
    on_quadrics,
    sum_of_rank_ones_check,
)
from compalg_kit.jordan.operators import u_operator, u_operator_matrix
from compalg_kit.jordan.rank_one import (
    is_alternating,
    jordan_rank_one,
    l_rank_tests,
    minors_rank_one_3,
    scorza_map,
    square_test,
)
from compalg_kit.jordan.veronese import (
    indeterminacy_member_raw,
    octonion_scaling_witness,
    veronese_raw,
)
from compalg_kit.verify.suites.jordan_suite import fundamental_identity, rank_one_equivalences, rank_one_random

F2 = FieldContext.prime(2)
F3 = FieldContext.prime(3)
F5 = FieldContext.prime(5)
Q = FieldContext.rationals()

# octonion coordinates: A-block (m11, m12, m21, m22), then B-block
O_E = (1, 0, 0, 0, 0, 0, 0, 0)
O_F = (0, 0, 0, 1, 0, 0, 0, 0)
O_E12 = (0, 1, 0, 0, 0, 0, 0, 0)
O_B11 = (0, 0, 0, 0, 1, 0, 0, 0)
O_ZERO = (0,) * 8
WITNESS = ROOT / "compalg_kit" / "data" / "x0_witness.json"


def random_hermitian(tag, n, seed, index):
    rng = trial_rng(seed, "hermitian", index)
    ctx = tag.context
    return HermitianMatrix.from_coordinates(n, tag, [ctx.random(rng) for _ in range(coordinate_dim(n, tag))])


def associative_triple(tag, seed, index):
    rng = trial_rng(seed, "triple", index)
    return [tag.one(), random_element(tag, rng), random_element(tag, rng)]


# ---------- Cubic norm ----------


def test_det3_of_diagonal():
    tag = algebra("O", F5)
    assert det3(HermitianMatrix.identity(3, tag)).value == 1
    assert det3(HermitianMatrix.diagonal(tag, (1, 2, 3))).value == 1  # 6 mod 5


@pytest.mark.parametrize("kind", ["C", "H", "O"])
def test_adjoint_identities(kind):
    tag = algebra(kind, F5)
    for i in range(10):
        a = random_hermitian(tag, 3, 1, i)
        sharp = adjoint(a)
        assert adjoint(sharp) == a.scale(det3_raw(a))
        assert cross(a, a) == sharp.scale(2)


@pytest.mark.parametrize("kind", ["C", "H", "O"])
def test_fundamental_identity(kind):
    tag = algebra(kind, F5)
    for i in range(2):
        a = random_hermitian(tag, 3, 2, 2 * i)
        b = random_hermitian(tag, 3, 2, 2 * i + 1)
        ua, ub = u_operator_matrix(a), u_operator_matrix(b)
        assert u_operator_matrix(u_operator(a, b)) == ua.mul(ub).mul(ua)


@pytest.mark.parametrize("kind", ["C", "H"])
def test_fundamental_identity_handler_over_rationals(kind):
    context = {"field": Q, "seed": 0, "label": "jordan.fundamental_identity", "trials": 3, "workers": 1}
    result = fundamental_identity({"algebras": [kind]}, context)
    assert result["success"]
    assert result["parts"][kind]["checked"] == 3


def test_adjoint_of_real_matrices_needs_odd_characteristic():
    tag = algebra("R", F2)
    with pytest.raises(PreconditionError):
        adjoint(HermitianMatrix.identity(3, tag))
    assert adjoint(HermitianMatrix.identity(3, algebra("R", F3))) == HermitianMatrix.identity(3, algebra("R", F3))


def test_octonion_u_agrees_with_quaternion_product():
    h, o = algebra("H", F5), algebra("O", F5)
    for i in range(5):
        a = random_hermitian(h, 3, 3, 2 * i)
        b = random_hermitian(h, 3, 3, 2 * i + 1)
        assert u_operator(embed_quaternion(a, o), embed_quaternion(b, o)) == embed_quaternion(u_operator(a, b), o)


# ---------- Rank one ----------


@pytest.mark.parametrize("kind", ["C", "H", "O"])
def test_elementary_is_rank_one_identity_is_not(kind):
    tag = algebra(kind, F5)
    e11 = HermitianMatrix.elementary(3, tag, 0)
    ident = HermitianMatrix.identity(3, tag)
    assert jordan_rank_one(e11) and minors_rank_one_3(e11) and square_test(e11)
    assert not jordan_rank_one(ident)
    assert not minors_rank_one_3(ident)
    assert not square_test(ident)


def test_rank_one_needs_nonzero():
    with pytest.raises(PreconditionError):
        jordan_rank_one(HermitianMatrix.zero(3, algebra("C", F5)))


def test_veronese_images_are_rank_one():
    for kind in ("C", "H"):
        tag = algebra(kind, F5)
        for i in range(10):
            a = veronese_raw(tag, associative_triple(tag, 4, i))
            assert jordan_rank_one(a) and minors_rank_one_3(a)
            report = l_rank_tests(a)
            assert report["success"] and report["rank"] == tag.dim


def test_indeterminacy_locus():
    tag = algebra("C", F5)
    zero = tag.zero()
    degenerate = [unit_e(tag), zero, zero]
    assert indeterminacy_member_raw(tag, degenerate)
    assert veronese_raw(tag, degenerate).is_zero()
    assert not indeterminacy_member_raw(tag, [tag.one(), zero, zero])


def test_scorza_map_is_alternating():
    tag = algebra("H", F5)
    for i in range(10):
        assert is_alternating(scorza_map(random_hermitian(tag, 3, 5, i)))
    with pytest.raises(PreconditionError):
        scorza_map(HermitianMatrix.identity(3, algebra("C", F5)))


def test_scorza_rank_two_iff_jordan_rank_one():
    tag = algebra("H", F2)
    for a in enumerate_hermitian(2, tag):
        if a.is_zero():
            continue
        assert jordan_rank_one(a) == (scorza_map(a).rank() == 2)
    tag = algebra("H", F5)
    for i in range(5):
        image = veronese_raw(tag, associative_triple(tag, 8, i))
        assert scorza_map(image).rank() == 2
        generic = random_hermitian(tag, 3, 8, i)
        assert jordan_rank_one(generic) == (scorza_map(generic).rank() == 2)


@pytest.mark.parametrize(
    "alg, n, checked, rank_one",
    [
        ("c", 3, 511, 49),  # rank-one matrices in M_3(F_2)
        ("h", 2, 63, 35),  # decomposable 2-vectors in F_2^4
    ],
)
def test_rank_one_equivalences_exhaustive_over_f2(alg, n, checked, rank_one):
    result = rank_one_equivalences({"p": 2, "alg": alg, "n": n}, {})
    assert result["success"]
    assert result["checked"] == checked
    assert result["census"]["rank_one"] == rank_one
    if n == 3:
        # Id^2 = Id = 3 Id over F_2
        assert result["census"]["square_converse_failures"] >= 1


@pytest.mark.parametrize("field", [Q, F3, F5])
def test_rank_one_random_handler(field):
    context = {"field": field, "seed": 0, "label": "jordan.rank_one_random", "trials": 6, "workers": 1}
    result = rank_one_random({"algebras": ["C", "H"]}, context)
    assert result["success"]
    assert result["field"] == field.label
    assert all(part["checked"] == 6 for part in result["parts"].values())


def test_rank_one_random_pins_prime_from_params():
    context = {"field": F5, "seed": 0, "label": "jordan.rank_one_random_f3", "trials": 4, "workers": 1}
    result = rank_one_random({"p": 3, "algebras": ["C"]}, context)
    assert result["success"] and result["field"] == "F3"


def test_square_test_needs_n3():
    with pytest.raises(ShapeError):
        square_test(HermitianMatrix.identity(2, algebra("H", F5)))


# ---------- Octonionic plane ----------


def test_veronese_needs_associative_generators():
    tag = algebra("O", F5)
    triple = next(
        t for t in itertools.product(tag.basis(), repeat=3) if not tag.is_zero(tag.associator(*t))
    )
    with pytest.raises(NonAssociativeError):
        veronese_raw(tag, list(triple))


def test_classify_x1_diagonal_witness():
    tag = algebra("O", F5)
    for i in range(10):
        a = veronese_raw(tag, associative_triple(tag, 6, i))
        result = classify_rank_one_octonion(a)
        assert result["class"] == "X1"
        assert result["case"] == "diagonal"
        assert result["verified"]


@pytest.mark.parametrize("ctx", [F3, F5, Q])
@pytest.mark.parametrize(
    "triple, case",
    [
        ((O_E, O_F, O_ZERO), "real_part"),
        ((O_E, O_F, O_E12), "real_part"),
        ((O_E, O_E12, tuple(2 * c for c in O_E)), "isotropic_line"),
        ((O_E, O_B11, O_ZERO), "isotropic_line"),
    ],
)
def test_classify_x1_with_zero_diagonal(ctx, triple, case):
    tag = algebra("O", ctx)
    a = veronese_raw(tag, [tag.from_ints(z) for z in triple])
    assert all(ctx.is_zero(d) for d in a.diag)
    result = classify_rank_one_octonion(a)
    assert result["class"] == "X1"
    assert result["case"] == case
    assert result["verified"]


def test_classify_x0_witness_file():
    a = hermitian_from_payload(load_payload(HermitianPayload, WITNESS))
    assert a.context == F3
    assert all(F3.is_zero(d) for d in a.diag)
    assert on_quadrics(a)
    result = classify_rank_one_octonion(a)
    assert result["class"] == "X0" and result["verified"]


def test_classify_payload_reports_residuals():
    tag = algebra("O", F5)
    ident = classify_payload(HermitianMatrix.identity(3, tag))
    assert not ident.rank_one
    assert ident.first_nonzero_residual == 0
    assert len(ident.residuals) == 27
    assert ident.class_ is None

    e11 = classify_payload(HermitianMatrix.elementary(3, tag, 0), {"command": "classify"})
    assert e11.rank_one and e11.class_ == "X1"
    assert '"class": "X1"' in dump_payload(e11)


def test_zero_matrix_is_not_rank_one():
    payload = classify_payload(HermitianMatrix.zero(3, algebra("O", F5)))
    assert not payload.rank_one
    assert payload.first_nonzero_residual is None


def test_classify_rejects_points_off_the_quadrics():
    with pytest.raises(PreconditionError):
        classify_rank_one_octonion(HermitianMatrix.identity(3, algebra("O", F5)))


def test_sums_of_two_rank_ones_are_singular():
    tag = algebra("O", F5)
    for i in range(10):
        a = veronese_raw(tag, associative_triple(tag, 7, 2 * i))
        b = veronese_raw(tag, associative_triple(tag, 7, 2 * i + 1))
        assert sum_of_rank_ones_check(a, b)


def test_octonion_scaling_fails_somewhere():
    witness = octonion_scaling_witness(F3)
    assert witness is not None


def test_hermitian_payload_keeps_one_based_indices():
    tag = algebra("C", F5)
    a = HermitianMatrix.off_diagonal(3, tag, 0, 2, tag.from_ints((1, 4)))
    payload = hermitian_to_payload(a)
    assert payload.upper == [[1, 3, 1, 4]]
    assert hermitian_from_payload(payload) == a
    assert tr(a).value == 0
