# compalg_kit/calgmod/submodules.py

"""
Right submodules of A^n for A = C or H.

A vector of A^n is stored flat: n blocks of dim A coordinates each, in the
coordinate order of the algebra. A submodule is a K-subspace of K^(n·dim A)
closed under right multiplication by every basis element of A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

from compalg_kit.compalg.algebra import AlgebraTag, Coords, unit_e, unit_f
from compalg_kit.errors import PreconditionError, ShapeError, SubmoduleError
from compalg_kit.foundation.linalg import Row, SubspaceK, is_zero_vector

MODULE_KINDS = ("C", "H")


def _require_kind(tag: AlgebraTag) -> None:
    if tag.kind not in MODULE_KINDS:
        raise PreconditionError(f"right submodules are handled for C and H, not {tag.kind}")


# ---------- Flat vectors ----------


def flatten(tag: AlgebraTag, vector: Sequence[Coords]) -> Row:
    out: List[Any] = []
    for x in vector:
        if len(x) != tag.dim:
            raise ShapeError(f"{tag.kind} coordinate of length {len(x)}")
        out.extend(tag.context.coerce(c) for c in x)
    return tuple(out)


def split_blocks(tag: AlgebraTag, v: Sequence[Any]) -> List[Coords]:
    d = tag.dim
    if len(v) % d:
        raise ShapeError(f"vector length {len(v)} is not a multiple of {d}")
    return [tuple(v[i : i + d]) for i in range(0, len(v), d)]


def right_multiply(tag: AlgebraTag, v: Sequence[Any], lam: Coords) -> Row:
    out: List[Any] = []
    for block in split_blocks(tag, v):
        out.extend(tag.mul(block, lam))
    return tuple(out)


def cyclic_space(tag: AlgebraTag, n: int, v: Sequence[Any]) -> SubspaceK:
    """K-span of v·lambda over a basis of A."""
    return SubspaceK.span(
        tag.context, (right_multiply(tag, v, lam) for lam in tag.basis()), n * tag.dim
    )


def block(tag: AlgebraTag, v: Sequence[Any], t: int) -> Coords:
    return tuple(v[t * tag.dim : (t + 1) * tag.dim])


# ---------- Submodules ----------


@dataclass(frozen=True)
class RightSubmodule:
    tag: AlgebraTag
    n: int
    space: SubspaceK
    generators: Tuple[Row, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        _require_kind(self.tag)
        if self.space.ambient_dim != self.n * self.tag.dim:
            raise ShapeError(
                f"space lives in K^{self.space.ambient_dim}, expected K^{self.n * self.tag.dim}"
            )
        for v in self.space.basis:
            for lam in self.tag.basis():
                if not self.space.contains_vector(right_multiply(self.tag, v, lam)):
                    raise SubmoduleError("subspace is not closed under right multiplication")

    @property
    def context(self):
        return self.tag.context

    @property
    def ambient_dim(self) -> int:
        return self.n * self.tag.dim

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def freely_generated(self) -> bool:
        """Whether the generators it was spanned from are free (dim = dim A · count)."""
        return bool(self.generators) and self.dim == self.tag.dim * len(self.generators)

    @property
    def rank(self) -> Optional[int]:
        return self.dim // self.tag.dim if is_free(self) else None

    def key(self) -> Tuple[Row, ...]:
        return self.space.key()

    def contains_vector(self, vector: Sequence[Coords]) -> bool:
        return self.space.contains_vector(flatten(self.tag, vector))

    @classmethod
    def zero(cls, tag: AlgebraTag, n: int) -> "RightSubmodule":
        return cls(tag, n, SubspaceK.zero(tag.context, n * tag.dim))

    @classmethod
    def full(cls, tag: AlgebraTag, n: int) -> "RightSubmodule":
        return cls(tag, n, SubspaceK.full(tag.context, n * tag.dim))


def span_flat(tag: AlgebraTag, n: int, vectors: Sequence[Sequence[Any]]) -> RightSubmodule:
    _require_kind(tag)
    flats = [tuple(v) for v in vectors]
    images = [right_multiply(tag, v, lam) for v in flats for lam in tag.basis()]
    space = SubspaceK.span(tag.context, images, n * tag.dim)
    return RightSubmodule(tag, n, space, generators=tuple(flats))


def module_span(tag: AlgebraTag, vectors: Sequence[Sequence[Coords]]) -> RightSubmodule:
    """K-span of {v_t·lambda}; check freely_generated for dim = dim A · r."""
    if not vectors:
        raise ShapeError("module_span needs at least one vector (use RightSubmodule.zero)")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ShapeError("vectors of different lengths")
    return span_flat(tag, n, [flatten(tag, v) for v in vectors])


def idempotent_image(tag: AlgebraTag, n: int, idempotent: Coords) -> SubspaceK:
    """A^n·u as a K-subspace."""
    ctx = tag.context
    nd = n * tag.dim
    units = [tuple(ctx.one() if k == i else ctx.zero() for k in range(nd)) for i in range(nd)]
    return SubspaceK.span(ctx, (right_multiply(tag, u, idempotent) for u in units), nd)


def decompose_pm(module: RightSubmodule) -> Tuple[SubspaceK, SubspaceK]:
    """E+ = E ∩ A^n·e and E- = E ∩ A^n·f; E = E+ ⊕ E-."""
    tag, n = module.tag, module.n
    plus = module.space.intersect(idempotent_image(tag, n, unit_e(tag)))
    minus = module.space.intersect(idempotent_image(tag, n, unit_f(tag)))
    if plus.dim + minus.dim != module.dim:
        raise SubmoduleError("E+ and E- do not add up to E")
    return plus, minus


def is_free(module: RightSubmodule) -> bool:
    """Free over C iff dim E+ = dim E-; over H iff 4 divides dim E."""
    if module.tag.kind == "H":
        return module.dim % 4 == 0
    plus, minus = decompose_pm(module)
    return plus.dim == minus.dim


def require_free(module: RightSubmodule) -> int:
    if not is_free(module):
        raise SubmoduleError(f"module of K-dimension {module.dim} is not free")
    return module.dim // module.tag.dim


def coordinate_projection(module_space: SubspaceK, tag: AlgebraTag, t: int) -> SubspaceK:
    """pi_t(E) inside A = K^dim A."""
    return SubspaceK.span(
        tag.context, (block(tag, v, t) for v in module_space.basis), tag.dim
    )


def coordinate_kernel(tag: AlgebraTag, n: int, t: int) -> SubspaceK:
    """Vectors of A^n with block t equal to zero."""
    ctx = tag.context
    nd = n * tag.dim
    skip = range(t * tag.dim, (t + 1) * tag.dim)
    units = [
        tuple(ctx.one() if k == i else ctx.zero() for k in range(nd))
        for i in range(nd)
        if i not in skip
    ]
    return SubspaceK.span(ctx, units, nd)


def nonzero_block(tag: AlgebraTag, v: Sequence[Any], t: int) -> bool:
    return not is_zero_vector(block(tag, v, t))
