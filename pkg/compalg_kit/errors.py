# compalg_kit/errors.py

from __future__ import annotations


class CompalgKitError(Exception):
    """Base class for every error raised by compalg-kit."""


class FieldError(CompalgKitError):
    """Context mismatch, division by zero, or an invalid characteristic."""


class ShapeError(CompalgKitError):
    """Dimension, ambient space, size or algebra tag mismatch."""


class PreconditionError(CompalgKitError):
    """An operation was called outside its domain (zero input, wrong tag...)."""


class NonAssociativeError(PreconditionError):
    """An octonionic tuple does not generate an associative subalgebra."""


class SubmoduleError(CompalgKitError):
    """A subspace is not a right submodule, or is not free where required."""


class ScaleGuardError(CompalgKitError):
    """An exhaustive enumeration was requested outside desk scale."""


class CodecError(CompalgKitError):
    """A JSON payload failed validation."""


class ConfigError(CompalgKitError):
    """Invalid suite configuration or command-line arguments."""
