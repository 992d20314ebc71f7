from fractions import Fraction
from functools import reduce
from math import gcd
from typing import FrozenSet, List, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def primitive_row(row: Sequence) -> Tuple[int, ...]:
    """Scale a rational row to coprime integers with positive leading entry."""
    values = [Fraction(v) for v in row]
    denominator = reduce(_lcm, (v.denominator for v in values), 1)
    ints = [int(v * denominator) for v in values]
    content = reduce(gcd, (abs(v) for v in ints), 0)
    if content == 0:
        return tuple(ints)
    ints = [v // content for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


class Arrangement(BaseModel):
    """Hyperplanes of P^n, each a primitive integer row of length n + 1."""
    n: int = Field(..., ge=0)
    hyperplanes: List[Tuple[int, ...]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_rows(self) -> "Arrangement":
        seen = {}
        for i, row in enumerate(self.hyperplanes):
            if len(row) != self.n + 1:
                raise ValueError(f"hyperplane {i} has {len(row)} coefficients, expected {self.n + 1}")
            if not any(row):
                raise ValueError(f"hyperplane {i} is the zero row")
            key = primitive_row(row)
            if key in seen:
                raise ValueError(f"hyperplanes {seen[key]} and {i} are proportional")
            seen[key] = i
        return self

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence]) -> "Arrangement":
        """Accept rational rows, scaled to primitive integers; zero rows stay zero."""
        return cls(n=n, hyperplanes=[primitive_row(row) for row in rows])

    @property
    def size(self) -> int:
        return len(self.hyperplanes)


class LatticeElement(BaseModel):
    """A flat of the central arrangement in C^{n+1}."""
    hyperplanes: FrozenSet[int] = Field(..., description="Indices of the hyperplanes containing the flat")
    equations: Tuple[Tuple[int, ...], ...] = Field(..., description="Canonical row-echelon equations")
    codim: int
    mobius: int = 0

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.hyperplanes)) + "}"


class IntersectionLattice(BaseModel):
    """Flats ordered by reverse inclusion; elements sorted by codimension, bottom first."""
    arrangement: Arrangement
    elements: List[LatticeElement]

    @property
    def bottom(self) -> LatticeElement:
        return self.elements[0]

    def leq(self, y: LatticeElement, z: LatticeElement) -> bool:
        """y <= z when z is contained in y."""
        return y.hyperplanes <= z.hyperplanes

    @property
    def rank(self) -> int:
        return max(e.codim for e in self.elements)


class PoincarePolynomial(BaseModel):
    """Coefficients of 1, t, t^2, ..."""
    coefficients: List[int]

    def evaluate(self, t: int) -> int:
        return sum(c * t ** i for i, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coefficient = str(c) if (c != 1 or i == 0) else ""
            terms.append(f"{coefficient}{power}")
        return " + ".join(terms) if terms else "0"
