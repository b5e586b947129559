# tests/test_calgmod.py

import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from compalg_kit.calgmod.census import enumerate_right_submodules, enumerate_submodules
from compalg_kit.calgmod.generators import extract_generators, generator_dims, paired_generators
from compalg_kit.calgmod.grassmann import (
    component_count_formula,
    dual_perp,
    grassmann_inverse,
    grassmann_iso,
)
from compalg_kit.calgmod.submodules import (
    RightSubmodule,
    decompose_pm,
    is_free,
    module_span,
    require_free,
)
from compalg_kit.compalg.algebra import algebra, unit_e
from compalg_kit.errors import PreconditionError, ScaleGuardError, SubmoduleError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import SubspaceK

F2 = FieldContext.prime(2)
F5 = FieldContext.prime(5)


# ---------- Submodules ----------


def test_module_span_of_a_unit_vector_is_free():
    tag = algebra("H", F5)
    m = module_span(tag, [[tag.one(), tag.zero(), tag.zero()]])
    assert m.dim == 4 and m.freely_generated
    assert is_free(m) and require_free(m) == 1


def test_idempotent_multiple_is_not_free():
    tag = algebra("C", F5)
    m = module_span(tag, [[unit_e(tag), tag.zero()]])
    plus, minus = decompose_pm(m)
    assert (plus.dim, minus.dim) == (1, 0)
    assert not m.freely_generated
    assert not is_free(m)
    with pytest.raises(SubmoduleError):
        require_free(m)


def test_subspaces_must_be_closed():
    tag = algebra("C", F5)
    line = SubspaceK.span(F5, [(1, 1, 0, 0)], 4)
    with pytest.raises(SubmoduleError):
        RightSubmodule(tag, 2, line)


def test_octonions_are_not_module_scalars():
    with pytest.raises(PreconditionError):
        RightSubmodule.zero(algebra("O", F5), 2)


# ---------- Census ----------


def test_census_of_c2_over_f2():
    payload = enumerate_submodules("c", 2, 2, F2)
    groups = {tuple(g.dims): (g.count, g.free) for g in payload.groups}
    assert groups == {(0, 2): (1, False), (1, 1): (9, True), (2, 0): (1, False)}
    assert payload.total == 11
    assert payload.free_count == 9
    assert payload.realized_group_count == 3
    assert payload.component_count_formula == component_count_formula(2, 1) == 2
    assert payload.config["alg"] == "c" and payload.config["p"] == 2


def test_right_submodules_of_h2_have_even_dimension():
    tag = algebra("H", F2)
    modules = enumerate_right_submodules(tag, 2)
    assert modules[0].dim == 0
    assert all(m.dim % 2 == 0 for m in modules)
    assert any(m.dim == 8 for m in modules)


def test_census_scale_guards():
    with pytest.raises(ScaleGuardError):
        enumerate_submodules("c", 2, 2, F5)
    with pytest.raises(ScaleGuardError):
        enumerate_submodules("h", 4, 4, F2)
    with pytest.raises(ScaleGuardError):
        enumerate_submodules("c", 2, 7, F2)


# ---------- Generators ----------


def test_extracted_generators_regenerate_h_modules():
    tag = algebra("H", F2)
    for m in enumerate_right_submodules(tag, 2, target_dim=6):
        gens = extract_generators(m)
        assert len(gens) == 2
        assert module_span(tag, gens).space == m.space
        assert sum(generator_dims(tag, 2, gens)) == m.dim


def test_paired_generators_over_c():
    tag = algebra("C", F2)
    for m in enumerate_right_submodules(tag, 2, target_dim=2):
        if not is_free(m):
            with pytest.raises(SubmoduleError):
                paired_generators(m)
            continue
        gens = paired_generators(m)
        assert len(gens) == 1
        assert module_span(tag, gens).space == m.space


# ---------- Grassmannians and duality ----------


@pytest.mark.parametrize("kind", ["C", "H"])
def test_grassmann_roundtrip_and_duality(kind):
    tag = algebra(kind, F5)
    v = [tag.one(), tag.from_ints([2] * tag.dim), tag.zero()]
    w = [tag.zero(), tag.one(), tag.from_ints([1] * tag.dim)]
    y = module_span(tag, [v, w])
    assert y.freely_generated and is_free(y)
    datum = grassmann_iso(y)
    assert datum.rank == 2
    assert grassmann_inverse(datum).space == y.space
    perp = dual_perp(y)
    assert perp.dim == 3 * tag.dim - y.dim
    assert dual_perp(perp).space == y.space
