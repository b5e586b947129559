"""Matrix models V^n_1, V^n_2, V^n_4 of the real, complex and quaternionic cases."""

from compalg_kit.classical.models import (
    ClassicalModel,
    adjoint_action,
    carrier_basis,
    from_hermitian_c,
    is_structure_element,
    matrix_rank_characterization,
    quadric_residual,
    rank_one_classical,
    structure_action,
    trace_classical,
    u_classical,
)

__all__ = [
    "ClassicalModel",
    "adjoint_action",
    "carrier_basis",
    "from_hermitian_c",
    "is_structure_element",
    "matrix_rank_characterization",
    "quadric_residual",
    "rank_one_classical",
    "structure_action",
    "trace_classical",
    "u_classical",
]
