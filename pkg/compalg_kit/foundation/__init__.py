"""Exact scalars, linear algebra, sparse polynomials, sampling and JSON codecs."""

from compalg_kit.foundation.fields import FieldContext, Scalar, field_arithmetic
from compalg_kit.foundation.linalg import MatrixK, SubspaceK, kernel_image, rref, subspace_ops

__all__ = [
    "FieldContext",
    "Scalar",
    "field_arithmetic",
    "MatrixK",
    "SubspaceK",
    "kernel_image",
    "rref",
    "subspace_ops",
]
