# compalg_kit/foundation/polynomial.py

from __future__ import annotations

from collections import defaultdict
from typing import Any, Dict, Hashable, Iterable, Iterator, Mapping, Tuple

from compalg_kit.foundation.fields import Ring

Monomial = Tuple[Hashable, ...]


def _merge(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))  # type: ignore[type-var]


class Polynomial:
    """
    Sparse polynomial with integer coefficients.

    Terms are keyed by sorted tuples of variable labels (repetition encodes
    powers), so two polynomials are equal iff their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        self._terms: Dict[Monomial, int] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def variable(cls, label: Hashable) -> "Polynomial":
        return cls({(label,): 1})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({(): c})

    # ---------- Inspection ----------

    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def coefficient(self, monomial: Iterable[Hashable]) -> int:
        return self._terms.get(tuple(sorted(monomial)), 0)  # type: ignore[type-var]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int) -> bool:
        return all(len(m) == d for m in self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v in m}

    # ---------- Arithmetic ----------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = defaultdict(int, self._terms)
        for m, c in other._terms.items():
            out[m] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = defaultdict(int, self._terms)
        for m, c in other._terms.items():
            out[m] -= c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: Dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[_merge(m1, m2)] += c1 * c2
        return Polynomial(out)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({m: c * v for m, v in self._terms.items()})

    def derivative(self, var: Hashable) -> "Polynomial":
        out: Dict[Monomial, int] = defaultdict(int)
        for m, c in self._terms.items():
            k = m.count(var)
            if k == 0:
                continue
            rest = list(m)
            rest.remove(var)
            out[tuple(rest)] += k * c
        return Polynomial(out)

    def evaluate(self, assignment: Mapping[Hashable, Any], ring: Ring) -> Any:
        acc = ring.zero()
        for m, c in self._terms.items():
            term = ring.from_int(c)
            for v in m:
                term = ring.mul(term, assignment[v])
            acc = ring.add(acc, term)
        return acc

    # ---------- Equality ----------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(str(v) for v in m) or "1"
            parts.append(f"{c:+d}*{mono}")
        return " ".join(parts)


class PolynomialRing:
    """Integer polynomial ring exposing the FieldContext arithmetic surface."""

    kind = "poly"
    characteristic = 0

    def zero(self) -> Polynomial:
        return Polynomial()

    def one(self) -> Polynomial:
        return Polynomial.constant(1)

    def from_int(self, n: int) -> Polynomial:
        return Polynomial.constant(n)

    def add(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a + b

    def sub(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a - b

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a * b

    def neg(self, a: Polynomial) -> Polynomial:
        return -a

    def is_zero(self, a: Polynomial) -> bool:
        return a.is_zero()

    def variable(self, label: Hashable) -> Polynomial:
        return Polynomial.variable(label)


POLY = PolynomialRing()
