"""The 27 points and 45 planes of the cubic form beta, and its link to H_3(O)."""

from compalg_kit.cubic27.automorphisms import (
    incidence_automorphism_count,
    is_automorphism,
    transpose_symmetry,
)
from compalg_kit.cubic27.forms import (
    GridTriple,
    beta_gradient,
    evaluate_alpha_scalar,
    evaluate_beta,
    singular_locus_check,
    theta_inverse,
    theta_map,
    triple_action,
)
from compalg_kit.cubic27.incidence import (
    build_structure,
    check_theta_grids,
    enumerate_3grids,
    is_double_six,
    meets,
    planes_through,
)

__all__ = [
    "GridTriple",
    "beta_gradient",
    "build_structure",
    "check_theta_grids",
    "enumerate_3grids",
    "evaluate_alpha_scalar",
    "evaluate_beta",
    "incidence_automorphism_count",
    "is_automorphism",
    "is_double_six",
    "meets",
    "planes_through",
    "singular_locus_check",
    "theta_inverse",
    "theta_map",
    "transpose_symmetry",
    "triple_action",
]
