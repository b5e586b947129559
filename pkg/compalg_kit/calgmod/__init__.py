"""Right submodules of C^n and H^n, their Grassmannians and duality."""

from compalg_kit.calgmod.census import enumerate_right_submodules, enumerate_submodules
from compalg_kit.calgmod.generators import extract_generators, paired_generators
from compalg_kit.calgmod.grassmann import (
    GrassmannDatum,
    component_count_formula,
    dual_perp,
    grassmann_inverse,
    grassmann_iso,
)
from compalg_kit.calgmod.submodules import RightSubmodule, decompose_pm, is_free, module_span

__all__ = [
    "GrassmannDatum",
    "RightSubmodule",
    "component_count_formula",
    "decompose_pm",
    "dual_perp",
    "enumerate_right_submodules",
    "enumerate_submodules",
    "extract_generators",
    "grassmann_inverse",
    "grassmann_iso",
    "is_free",
    "module_span",
    "paired_generators",
]
