# compalg_kit/foundation/fields.py

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Protocol, Union

from compalg_kit.errors import FieldError

# Raw values: Fraction for Q, int in [0, p) for F_p. Algebra code works on raw
# values through the context; Scalar wraps them at API boundaries.
Raw = Union[Fraction, int]

MAX_PRIME = 1 << 16


class Ring(Protocol):
    """Arithmetic surface shared by FieldContext and PolynomialRing."""

    def zero(self) -> Any: ...

    def one(self) -> Any: ...

    def from_int(self, n: int) -> Any: ...

    def add(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def neg(self, a: Any) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldContext:
    """
    The base field: Q (kind "q", characteristic 0) or F_p (kind "fp").

    Two contexts are equal iff kind and characteristic agree.
    """

    kind: str
    characteristic: int

    def __post_init__(self) -> None:
        if self.kind == "q":
            if self.characteristic != 0:
                raise FieldError("Q has characteristic 0")
        elif self.kind == "fp":
            p = self.characteristic
            if not is_prime(p):
                raise FieldError(f"{p} is not a prime")
            if p >= MAX_PRIME:
                raise FieldError(f"prime fields are limited to p < {MAX_PRIME}")
        else:
            raise FieldError(f"unknown field kind: {self.kind!r}")

    # ---------- Constructors ----------

    @classmethod
    def rationals(cls) -> "FieldContext":
        return cls("q", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldContext":
        return cls("fp", p)

    @classmethod
    def parse(cls, field: str, p: int | None = None) -> "FieldContext":
        if field == "q":
            return cls.rationals()
        if field == "fp":
            if p is None:
                raise FieldError("field fp requires a prime p")
            return cls.prime(p)
        raise FieldError(f"unknown field: {field!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "fp"

    @property
    def label(self) -> str:
        return "Q" if self.kind == "q" else f"F{self.characteristic}"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise FieldError("Q is infinite")
        return self.characteristic

    # ---------- Raw arithmetic ----------

    def zero(self) -> Raw:
        return Fraction(0) if self.kind == "q" else 0

    def one(self) -> Raw:
        return Fraction(1) if self.kind == "q" else 1

    def from_int(self, n: int) -> Raw:
        if self.kind == "q":
            return Fraction(n)
        return n % self.characteristic

    def coerce(self, value: Any) -> Raw:
        """Accept int, Fraction or "a/b" strings; reduce into the field."""
        if isinstance(value, str):
            try:
                value = Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"cannot parse scalar {value!r}") from exc
        if isinstance(value, bool):
            raise FieldError("booleans are not scalars")
        if self.kind == "q":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldError(f"cannot coerce {value!r} into Q")
        p = self.characteristic
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(f"{value} has no image in F{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        raise FieldError(f"cannot coerce {value!r} into F{p}")

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "q":
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "q":
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "q":
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a: Raw) -> Raw:
        if self.kind == "q":
            return -a
        return (-a) % self.characteristic

    def inv(self, a: Raw) -> Raw:
        if self.is_zero(a):
            raise FieldError("division by zero")
        if self.kind == "q":
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Raw) -> bool:
        return a == 0

    # ---------- Sampling / enumeration ----------

    def random(self, rng: random.Random, bound: int = 9) -> Raw:
        """Uniform over F_p; over Q numerators and denominators bounded by `bound`."""
        if self.kind == "fp":
            return rng.randrange(self.characteristic)
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return Fraction(num, den)

    def random_nonzero(self, rng: random.Random, bound: int = 9) -> Raw:
        while True:
            value = self.random(rng, bound)
            if not self.is_zero(value):
                return value

    def elements(self) -> Iterator[Raw]:
        if not self.is_finite:
            raise FieldError("cannot enumerate Q")
        return iter(range(self.characteristic))

    def nonzero_elements(self) -> Iterator[Raw]:
        return iter(range(1, self.order))

    # ---------- JSON ----------

    def to_json(self, a: Raw) -> Any:
        if self.kind == "q":
            frac = Fraction(a)
            return f"{frac.numerator}/{frac.denominator}"
        return int(a)

    def from_json(self, value: Any) -> Raw:
        if self.kind == "fp":
            if isinstance(value, bool) or not isinstance(value, int):
                raise FieldError(f"F_p entries must be integers, got {value!r}")
            if not 0 <= value < self.characteristic:
                raise FieldError(f"residue {value} outside [0, {self.characteristic})")
            return value
        return self.coerce(value)


@dataclass(frozen=True)
class Scalar:
    """An exact field element tied to its context."""

    context: FieldContext
    value: Raw

    @classmethod
    def of(cls, context: FieldContext, value: Any) -> "Scalar":
        return cls(context, context.coerce(value))

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise FieldError(f"expected Scalar, got {type(other).__name__}")
        if other.context != self.context:
            raise FieldError(
                f"context mismatch: {self.context.label} vs {other.context.label}"
            )

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.context, self.context.add(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.context, self.context.sub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.context, self.context.mul(self.value, other.value))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.context, self.context.div(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.context, self.context.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.context, self.context.inv(self.value))

    def is_zero(self) -> bool:
        return self.context.is_zero(self.value)

    def __str__(self) -> str:
        return str(self.context.to_json(self.value))


def field_arithmetic(a: Scalar, b: Scalar, op: str) -> Scalar:
    """add | sub | mul | div on two scalars of one context."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise FieldError(f"unknown operation: {op!r}")
