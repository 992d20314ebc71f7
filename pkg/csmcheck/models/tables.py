from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from .ring import BasisKey, GradedClass, RingModel


class TableKind(str, Enum):
    CSM = "csm"
    SSM = "ssm"


class CellTable(BaseModel):
    """
    Schubert expansions of the classes of Schubert cells.

    Cells are keyed by the basis index of their closure, so row u holds the
    class of the open cell whose closure class is ring.basis key u. A table
    may list only some cells.
    """
    ring: RingModel
    kind: TableKind
    rows: Dict[BasisKey, GradedClass] = Field(default_factory=dict)
    provenance: Optional[str] = None

    @model_validator(mode="after")
    def check_rows(self) -> "CellTable":
        for cell, cls_ in self.rows.items():
            if not self.ring.has_key(cell):
                raise ValueError(f"{cell!r} is not a cell of {self.ring.describe()}")
            if cls_.ring != self.ring:
                raise ValueError(f"row {self.ring.label(cell)} lives in {cls_.ring.describe()}")
        return self

    @property
    def is_complete(self) -> bool:
        return len(self.rows) == len(self.ring.basis)

    def cells(self) -> List[BasisKey]:
        """Listed cells in canonical order."""
        return [key for key in self.ring.basis if key in self.rows]

    def row(self, cell: BasisKey) -> GradedClass:
        return self.rows[cell]

    def entry(self, cell: BasisKey, cls_key: BasisKey) -> int:
        """The coefficient a(w; u) of class w in the row of cell u."""
        return self.rows[cell].coefficient(cls_key)

    def matrix(self) -> List[List[int]]:
        """Rows = listed cells, columns = every basis class, canonical order."""
        return [self.rows[cell].dense() for cell in self.cells()]

    def with_rows(self, kind: TableKind, rows: Dict[BasisKey, GradedClass]) -> "CellTable":
        return CellTable(ring=self.ring, kind=kind, rows=rows, provenance=self.provenance)
