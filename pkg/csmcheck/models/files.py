"""
Input file schemas.

Integers may be JSON numbers or decimal strings; arrangement coefficients
may also be rational strings such as "3/4".
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .common import IntString, RationalString
from .partition import Partition
from .ring import RingKind, RingModel
from .tables import TableKind


class ModelSpec(BaseModel):
    kind: RingKind
    n: IntString
    k: Optional[IntString] = None

    def to_ring(self) -> RingModel:
        if self.kind == RingKind.PROJECTIVE:
            return RingModel.projective(self.n)
        return RingModel.grassmannian(self.k, self.n)

    @model_validator(mode="after")
    def check_model(self) -> "ModelSpec":
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.kind == RingKind.PROJECTIVE and self.k is not None:
            raise ValueError("projective models take no k")
        if self.kind == RingKind.GRASSMANNIAN and (self.k is None or not 1 <= self.k < self.n):
            raise ValueError(f"Gr(k, n) requires 1 <= k < n, got k={self.k}, n={self.n}")
        return self


class OrientationRows(str, Enum):
    CELLS = "cells"
    CLASSES = "classes"


class OrientationIndex(str, Enum):
    DIMENSION = "dimension"
    CODIMENSION = "codimension"


class Orientation(BaseModel):
    """How a printed matrix is read: what its rows are and what its labels index."""
    rows: OrientationRows
    index: OrientationIndex

    def describe(self) -> str:
        return f"rows={self.rows.value}, index={self.index.value}"


class ClassTerm(BaseModel):
    schubert: Partition = Field(..., alias="class")
    value: IntString

    model_config = {"populate_by_name": True}


class TableRow(BaseModel):
    cell: Partition
    terms: List[ClassTerm]


class FixtureFile(BaseModel):
    """
    An embedded SSM table as printed.

    Full tables carry the printed matrix, its printed index list and the
    recorded orientation; partial tables carry explicit rows.
    """
    name: str
    model: ModelSpec
    kind: TableKind = TableKind.SSM
    printed_index: Optional[List[Partition]] = None
    matrix: Optional[List[List[IntString]]] = None
    orientation: Optional[Orientation] = None
    rows: Optional[List[TableRow]] = None
    provenance: str

    @model_validator(mode="after")
    def one_layout(self) -> "FixtureFile":
        printed = self.matrix is not None
        if printed == (self.rows is not None):
            raise ValueError("a fixture carries either a printed matrix or explicit rows")
        if printed:
            if self.printed_index is None or self.orientation is None:
                raise ValueError("a printed matrix needs printed_index and orientation")
            ring = self.model.to_ring()
            if sorted(map(tuple, self.printed_index)) != sorted(ring.basis):
                raise ValueError(f"printed_index must list every partition of {ring.describe()} once")
        return self


class TableFile(BaseModel):
    """A user-supplied CSM or SSM table: rows are cells, columns classes, both in `basis` order."""
    model: ModelSpec
    basis: List[Partition]
    rows: List[List[IntString]]

    @model_validator(mode="after")
    def check_shape(self) -> "TableFile":
        ring = self.model.to_ring()
        if ring.is_projective:
            raise ValueError("table files describe Grassmannian models")
        if sorted(map(tuple, self.basis)) != sorted(ring.basis):
            raise ValueError(f"basis must list every partition of {ring.describe()} once")
        size = len(self.basis)
        if len(self.rows) != size or any(len(row) != size for row in self.rows):
            raise ValueError(f"rows must form a {size}x{size} matrix")
        return self


class ArrangementFile(BaseModel):
    n: IntString = Field(..., description="Projective dimension of the ambient P^n")
    hyperplanes: List[List[RationalString]] = Field(default_factory=list)

    @field_validator("n")
    def non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("n must be non-negative")
        return v

    @model_validator(mode="after")
    def row_lengths(self) -> "ArrangementFile":
        for i, row in enumerate(self.hyperplanes):
            if len(row) != self.n + 1:
                raise ValueError(f"hyperplane {i} has {len(row)} coefficients, expected {self.n + 1}")
        return self


class StratumEntry(BaseModel):
    name: str = Field(..., min_length=1)
    dim: IntString
    chi_c: IntString
    closure_of: List[str] = Field(default_factory=list, description="Strata whose closure contains this one")
    euler_table: Optional[Dict[str, IntString]] = Field(
        None, description="Eu of this stratum's closure at the strata it contains"
    )
    class_map: Optional[List[IntString]] = Field(
        None, description="Chern-Mather class of the closure, canonical basis order"
    )


class PosetFile(BaseModel):
    ambient: Optional[ModelSpec] = None
    strata: List[StratumEntry]
    functions: Dict[str, Dict[str, IntString]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_references(self) -> "PosetFile":
        names = {s.name for s in self.strata}
        for entry in self.strata:
            if entry.class_map is not None and self.ambient is None:
                raise ValueError(f"{entry.name} has class_map but the file has no ambient model")
        for fname, values in self.functions.items():
            unknown = set(values) - names
            if unknown:
                raise ValueError(f"function {fname} names unknown strata {sorted(unknown)}")
        return self
