from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .partition import Rectangle, contains, label, partitions_in_rectangle

# Projective models index by the power c of h; Grassmannian models by partitions
BasisKey = Union[int, Tuple[int, ...]]


class RingKind(str, Enum):
    PROJECTIVE = "projective"
    GRASSMANNIAN = "grassmannian"


class RingModel(BaseModel):
    """Chow ring of P^n or Gr(k, n), graded by homological dimension."""
    model_config = ConfigDict(frozen=True)

    kind: RingKind = Field(..., description="projective or grassmannian")
    n: int = Field(..., ge=0, description="P^n, or the ambient C^n of Gr(k, n)")
    k: Optional[int] = Field(None, description="Subspace dimension for Grassmannians")

    @model_validator(mode="after")
    def check_shape(self) -> "RingModel":
        if self.kind == RingKind.PROJECTIVE:
            if self.k is not None:
                raise ValueError("projective models take no k")
        else:
            if self.k is None or not 1 <= self.k < self.n:
                raise ValueError(f"Gr(k, n) requires 1 <= k < n, got k={self.k}, n={self.n}")
        return self

    @classmethod
    def projective(cls, n: int) -> "RingModel":
        return cls(kind=RingKind.PROJECTIVE, n=n)

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "RingModel":
        return cls(kind=RingKind.GRASSMANNIAN, k=k, n=n)

    @property
    def is_projective(self) -> bool:
        return self.kind == RingKind.PROJECTIVE

    @property
    def rectangle(self) -> Rectangle:
        if self.is_projective:
            raise AttributeError("projective models have no rectangle")
        return Rectangle(self.k, self.n - self.k)

    @property
    def dim(self) -> int:
        return self.n if self.is_projective else self.k * (self.n - self.k)

    @property
    def basis(self) -> Tuple[BasisKey, ...]:
        return _basis(self.kind, self.n, self.k)

    def dim_of(self, key: BasisKey) -> int:
        if self.is_projective:
            return self.n - key
        return sum(key)

    def index_of(self, key: BasisKey) -> int:
        return _positions(self.kind, self.n, self.k)[key]

    def has_key(self, key: BasisKey) -> bool:
        return key in _positions(self.kind, self.n, self.k)

    @property
    def fundamental_key(self) -> BasisKey:
        return self.basis[-1]

    @property
    def point_key(self) -> BasisKey:
        return self.basis[0]

    def in_closure(self, w: BasisKey, u: BasisKey) -> bool:
        """True when the Schubert variety of w lies in that of u (Bruhat order)."""
        if self.is_projective:
            return w >= u
        return contains(u, w)

    def label(self, key: BasisKey) -> str:
        if self.is_projective:
            d = self.n - key
            return "[pt]" if d == 0 else f"[P^{d}]"
        return label(key)

    def describe(self) -> str:
        return f"P^{self.n}" if self.is_projective else f"Gr({self.k},{self.n})"


@lru_cache(maxsize=None)
def _basis(kind: RingKind, n: int, k: Optional[int]) -> Tuple[BasisKey, ...]:
    if kind == RingKind.PROJECTIVE:
        # dimension ascending: h^n (the point) first, h^0 last
        return tuple(range(n, -1, -1))
    return partitions_in_rectangle(k, n - k)


@lru_cache(maxsize=None)
def _positions(kind: RingKind, n: int, k: Optional[int]) -> Dict[BasisKey, int]:
    return {key: i for i, key in enumerate(_basis(kind, n, k))}


def _normalize_key(key) -> BasisKey:
    if isinstance(key, list):
        return tuple(key)
    return key


class GradedClass(BaseModel):
    """Integer combination of basis classes of a RingModel; zero coefficients are never stored."""
    model_config = ConfigDict(frozen=True)

    ring: RingModel
    coeffs: Dict[BasisKey, int] = Field(default_factory=dict)

    @field_validator("coeffs", mode="before")
    def normalize_keys(cls, v):
        if isinstance(v, dict):
            return {_normalize_key(key): c for key, c in v.items()}
        return v

    @field_validator("coeffs", mode="after")
    def prune_zeros(cls, v: Dict[BasisKey, int]) -> Dict[BasisKey, int]:
        return {key: c for key, c in v.items() if c != 0}

    @model_validator(mode="after")
    def check_support(self) -> "GradedClass":
        for key in self.coeffs:
            if not self.ring.has_key(key):
                raise ValueError(f"{key!r} is not a basis index of {self.ring.describe()}")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.coeffs.items())))

    @classmethod
    def build(cls, ring: RingModel, coeffs: Dict[BasisKey, int]) -> "GradedClass":
        """Fast constructor for service code: keys are trusted, zeros pruned."""
        return cls.model_construct(ring=ring, coeffs={key: c for key, c in coeffs.items() if c != 0})

    @classmethod
    def zero(cls, ring: RingModel) -> "GradedClass":
        return cls.model_construct(ring=ring, coeffs={})

    def coefficient(self, key: BasisKey) -> int:
        return self.coeffs.get(key, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> List[BasisKey]:
        """Nonzero basis indices in canonical basis order."""
        return sorted(self.coeffs, key=self.ring.index_of)

    def dense(self) -> List[int]:
        """Coefficients as a list in canonical basis order."""
        return [self.coefficient(key) for key in self.ring.basis]

    def top_dimension(self) -> Optional[int]:
        if not self.coeffs:
            return None
        return max(self.ring.dim_of(key) for key in self.coeffs)

    def __add__(self, other: "GradedClass") -> "GradedClass":
        from ..services.ring_service import add
        return add(self, other)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        from ..services.ring_service import subtract
        return subtract(self, other)

    def __neg__(self) -> "GradedClass":
        return GradedClass.build(self.ring, {key: -c for key, c in self.coeffs.items()})

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        from ..services.ring_service import multiply
        return multiply(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for key in reversed(self.support()):
            c = self.coeffs[key]
            sign = "-" if c < 0 else "+"
            magnitude = "" if abs(c) == 1 else f"{abs(c)}"
            terms.append(f"{sign} {magnitude}{self.ring.label(key)}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
