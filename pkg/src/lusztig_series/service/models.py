"""Pydantic request/response models for the service and the CLI client.

Every potentially large count travels as a decimal string; floats never
appear in any payload.
"""

from __future__ import annotations

from itertools import groupby
from typing import Literal, Optional, Union

from pydantic import BaseModel

from ..shapes import CentralizerShape, EigenPart, GenericFactor, shape_to_text


class ValueResponse(BaseModel):
    fn: str
    n: int
    value: str


class Table1Row(BaseModel):
    residue: int
    pi: str
    beta: str


class Table2Row(BaseModel):
    n: int
    beta: str
    alpha: str
    alpha_plus: str
    alpha_minus: str


class GammaCell(BaseModel):
    value: str
    pairs: list[tuple[int, int]]
    display: str


class Table3Row(BaseModel):
    n: int
    aa: GammaCell
    a_plus: GammaCell


class Table4Row(BaseModel):
    n: int
    plusplus: GammaCell
    plus_minus: GammaCell


class TableResponse(BaseModel):
    table: int
    rows: Union[list[Table1Row], list[Table2Row], list[Table3Row], list[Table4Row]]


class PartModel(BaseModel):
    dim: int
    sign: Optional[str] = None


class FactorModel(BaseModel):
    kind: str
    degree: int
    field_power: int = 1
    count: int = 1


class ShapeModel(BaseModel):
    one: PartModel
    minus: PartModel
    generic: list[FactorModel]
    text: str

    @classmethod
    def from_shape(cls, shape: CentralizerShape) -> "ShapeModel":
        factors = [
            FactorModel(kind=k, degree=d, field_power=f, count=len(list(group)))
            for (k, d, f), group in groupby(
                shape.generic, key=lambda x: (x.kind, x.degree, x.field_power)
            )
        ]
        return cls(
            one=PartModel(dim=shape.one_part.dim, sign=shape.one_part.sign),
            minus=PartModel(dim=shape.minus_part.dim, sign=shape.minus_part.sign),
            generic=factors,
            text=shape_to_text(shape),
        )

    def to_shape(self) -> CentralizerShape:
        generic = tuple(
            GenericFactor(f.kind, f.degree, f.field_power)
            for f in self.generic
            for _ in range(f.count)
        )
        return CentralizerShape(
            EigenPart(self.one.dim, self.one.sign),
            EigenPart(self.minus.dim, self.minus.sign),
            generic,
        )


class ThresholdModel(BaseModel):
    shape_class: str
    inequality: str
    min_q: int
    side_condition: Optional[str] = None


class MaxResponse(BaseModel):
    family: str
    parity: str
    n: int
    value: str
    witnesses: Optional[list[ShapeModel]] = None
    thresholds: list[ThresholdModel]


class ThresholdResponse(BaseModel):
    family: str
    parity: str
    n: int
    thresholds: list[ThresholdModel]


class ReportEntryModel(BaseModel):
    claim_id: str
    status: Literal["verified", "failed", "flagged"]
    expected: str
    actual: str
    location: str


class HealthResponse(BaseModel):
    status: str
    version: str
