# compalg_kit/foundation/codec.py

"""
JSON exchange formats.

Every payload is a pydantic model; `parse_payload` turns validation failures
into CodecError so callers only ever see the package's own exceptions.
Conversions to domain types that live above `foundation` are provided by
those modules (`CompElement`, `HermitianMatrix`, ...).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from compalg_kit.errors import CodecError, CompalgKitError
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK

Entry = Union[int, str]
P = TypeVar("P", bound=BaseModel)


class FieldPayload(BaseModel):
    """Shared `field` / `p` header."""

    field: Literal["q", "fp"]
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_field(self) -> "FieldPayload":
        if self.field == "fp" and self.p is None:
            raise ValueError("field fp requires p")
        if self.field == "q" and self.p is not None:
            raise ValueError("p must be omitted for field q")
        try:
            FieldContext.parse(self.field, self.p)
        except CompalgKitError as exc:
            raise ValueError(str(exc)) from exc
        return self

    def context(self) -> FieldContext:
        return FieldContext.parse(self.field, self.p)

    def decode(self, values: List[Entry]) -> tuple:
        ctx = self.context()
        try:
            return tuple(ctx.from_json(v) for v in values)
        except CompalgKitError as exc:
            raise CodecError(str(exc)) from exc


def field_header(ctx: FieldContext) -> Dict[str, Any]:
    if ctx.kind == "q":
        return {"field": "q"}
    return {"field": "fp", "p": ctx.characteristic}


# ---------- Matrices ----------


class MatrixPayload(FieldPayload):
    rows: List[List[Entry]]

    @model_validator(mode="after")
    def _check_rows(self) -> "MatrixPayload":
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        return self

    def to_matrix(self) -> MatrixK:
        ctx = self.context()
        rows = tuple(self.decode(r) for r in self.rows)
        ncols = len(self.rows[0]) if self.rows else 0
        return MatrixK(ctx, rows, ncols)

    @classmethod
    def from_matrix(cls, m: MatrixK) -> "MatrixPayload":
        ctx = m.context
        return cls(**field_header(ctx), rows=[[ctx.to_json(a) for a in row] for row in m.rows])


# ---------- Algebra elements ----------


class CompElementPayload(FieldPayload):
    alg: Literal["r", "c", "h", "o"]
    coords: List[Entry]


class HermitianPayload(FieldPayload):
    """Upper entries are [i, j, coords...] with 1-based i < j."""

    n: int = Field(ge=1)
    alg: Literal["r", "c", "h", "o"]
    diag: List[Entry]
    upper: List[List[Entry]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_shape(self) -> "HermitianPayload":
        if len(self.diag) != self.n:
            raise ValueError(f"diag needs {self.n} entries")
        for item in self.upper:
            if len(item) < 2 or not all(isinstance(k, int) for k in item[:2]):
                raise ValueError(f"bad upper entry {item!r}")
            i, j = item[0], item[1]
            if not (1 <= i < j <= self.n):  # type: ignore[operator]
                raise ValueError(f"upper index ({i},{j}) outside 1 <= i < j <= {self.n}")
        return self


class ClassicalModelRef(BaseModel):
    a: Literal[1, 2, 4]
    n: int = Field(ge=1)


class ClassicalPayload(BaseModel):
    model: ClassicalModelRef
    matrix: MatrixPayload


# ---------- Reports ----------


class CensusGroup(BaseModel):
    dims: List[int]
    count: int
    free: bool = False


class CensusPayload(BaseModel):
    config: Dict[str, Any]
    total: int
    groups: List[CensusGroup]
    free_count: int
    realized_group_count: int
    component_count_formula: Optional[int] = None


class PlanePayload(BaseModel):
    points: List[str]
    sign: Literal[1, -1]


class IncidencePayload(BaseModel):
    config: Dict[str, Any] = Field(default_factory=dict)
    points: List[str]
    planes: List[PlanePayload]

    @model_validator(mode="after")
    def _check_counts(self) -> "IncidencePayload":
        if len(self.points) != 27:
            raise ValueError("expected 27 points")
        return self


class ClassifyPayload(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    config: Dict[str, Any] = Field(default_factory=dict)
    rank_one: bool
    residuals: List[Entry]
    first_nonzero_residual: Optional[int] = None
    class_: Optional[Literal["X0", "X1"]] = Field(default=None, alias="class")
    witness: Optional[Any] = None


# ---------- IO helpers ----------


def parse_payload(model: Type[P], data: Any) -> P:
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise CodecError(f"{model.__name__}: {exc.errors()[0]['msg']}") from exc


def load_payload(model: Type[P], path: Union[str, Path]) -> P:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise CodecError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise CodecError(f"{path}: invalid JSON ({exc.msg})") from exc
    return parse_payload(model, data)


def dump_payload(payload: BaseModel) -> str:
    """Deterministic JSON text: aliases, sorted keys, trailing newline."""
    data = payload.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
