from typing import Dict, Iterable, List, Mapping, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core.exceptions import InputValidationError
from .ring import GradedClass, RingModel


class Stratum(BaseModel):
    """A connected smooth stratum; its closure is identified with it by name."""
    name: str = Field(..., min_length=1)
    dim: int = Field(..., ge=0)
    chi_c: int = Field(..., description="Compactly supported Euler characteristic")


class EulerTable(BaseModel):
    """Local Euler obstructions: rows[Y][s] = Eu_Y(s) for s in the closure of Y."""
    rows: Dict[str, Dict[str, int]] = Field(default_factory=dict)

    def value(self, closure: str, stratum: str) -> int:
        return self.rows.get(closure, {}).get(stratum, 0)


class StratSpace(BaseModel):
    """
    A finite stratified space.

    `below[t]` lists every stratum in the closure of t, t included, in the
    order of `strata`. Build instances with `from_covers`, which takes the
    transitive closure and fills in default Euler obstructions.
    """
    strata: List[Stratum]
    below: Dict[str, List[str]]
    euler: EulerTable
    ring: Optional[RingModel] = None
    class_map: Dict[str, GradedClass] = Field(default_factory=dict)

    @field_validator("strata")
    def unique_names(cls, v: List[Stratum]) -> List[Stratum]:
        names = [s.name for s in v]
        if len(set(names)) != len(names):
            raise ValueError("stratum names must be unique")
        return v

    @model_validator(mode="after")
    def check_structure(self) -> "StratSpace":
        dims = {s.name: s.dim for s in self.strata}
        if set(self.below) != set(dims):
            raise ValueError("closure data must list every stratum exactly once")
        for t, members in self.below.items():
            if t not in members:
                raise ValueError(f"stratum {t} must lie in its own closure")
            for s in members:
                if s not in dims:
                    raise ValueError(f"unknown stratum {s} in the closure of {t}")
                if s != t and dims[s] >= dims[t]:
                    raise ValueError(
                        f"{s} lies in the closure of {t} but dim {dims[s]} >= dim {dims[t]}"
                    )
                if not set(self.below[s]) <= set(members):
                    raise ValueError(f"closure order is not transitive at {s} <= {t}")
        for closure, row in self.euler.rows.items():
            if closure not in dims:
                raise ValueError(f"Euler table row for unknown stratum {closure}")
            for s in row:
                if s not in self.below[closure] and row[s] != 0:
                    raise ValueError(f"Eu_{closure} must vanish at {s}, which is outside its closure")
            if row.get(closure) != 1:
                raise ValueError(f"Eu_{closure} must equal 1 on its open stratum")
        for closure, cls_ in self.class_map.items():
            if closure not in dims:
                raise ValueError(f"class data for unknown stratum {closure}")
            if self.ring is None or cls_.ring != self.ring:
                raise ValueError(f"class data for {closure} does not live in the ambient ring")
        return self

    @classmethod
    def from_covers(
        cls,
        strata: Iterable[Stratum],
        closure_of: Mapping[str, Iterable[str]],
        euler_rows: Optional[Mapping[str, Mapping[str, int]]] = None,
        ring: Optional[RingModel] = None,
        class_map: Optional[Mapping[str, GradedClass]] = None,
    ) -> "StratSpace":
        """
        Build a space from the relation "s lies in the closure of t".

        Args:
            strata: the strata, in the order used for reports
            closure_of: for each stratum s, names of strata t whose closure contains s
            euler_rows: supplied rows Eu_Y(s); absent rows and entries default to 1
                on the closure
            ring: ambient Chow ring for class computations
            class_map: Chern-Mather classes c_Ma(Y) keyed by open stratum
        """
        strata = list(strata)
        names = [s.name for s in strata]
        above: Dict[str, set] = {name: set(closure_of.get(name, ())) for name in names}
        for name, targets in above.items():
            for t in targets:
                if t not in above:
                    raise InputValidationError(f"{name} names unknown stratum {t} in closure_of")

        # transitive closure by repeated expansion
        changed = True
        while changed:
            changed = False
            for name in names:
                reach = set(above[name])
                for t in above[name]:
                    reach |= above[t]
                if reach != above[name]:
                    above[name] = reach
                    changed = True
        for name in names:
            if name in above[name]:
                raise InputValidationError(f"closure order has a cycle through {name}")

        below = {t: [s for s in names if s == t or t in above[s]] for t in names}
        supplied = euler_rows or {}
        rows = {}
        for t in names:
            given = supplied.get(t, {})
            outside = sorted(s for s, v in given.items() if s not in below[t] and int(v) != 0)
            if outside:
                raise InputValidationError(f"Eu_{t} must vanish outside its closure, got values at {outside}")
            rows[t] = {s: int(given.get(s, 1)) for s in below[t]}
        return cls(
            strata=strata,
            below=below,
            euler=EulerTable(rows=rows),
            ring=ring,
            class_map=dict(class_map or {}),
        )

    @property
    def names(self) -> List[str]:
        return [s.name for s in self.strata]

    def stratum(self, name: str) -> Stratum:
        for s in self.strata:
            if s.name == name:
                return s
        raise KeyError(name)

    def dim_of(self, name: str) -> int:
        return self.stratum(name).dim

    def chi_c(self, name: str) -> int:
        return self.stratum(name).chi_c

    def leq(self, s: str, t: str) -> bool:
        """True when s lies in the closure of t."""
        return s in self.below[t]

    def descending(self) -> List[str]:
        """Stratum names by strictly non-increasing dimension."""
        return [s.name for s in sorted(self.strata, key=lambda s: -s.dim)]

    def euler_value(self, closure: str, stratum: str) -> int:
        return self.euler.value(closure, stratum)

    def has_classes(self) -> bool:
        return self.ring is not None and bool(self.class_map)


class ConstructibleFn(BaseModel):
    """An integer value on every stratum of `space`."""
    space: StratSpace
    values: Dict[str, int]

    @model_validator(mode="after")
    def defined_everywhere(self) -> "ConstructibleFn":
        names = set(self.space.names)
        missing = names - set(self.values)
        extra = set(self.values) - names
        if missing:
            raise ValueError(f"function undefined on strata {sorted(missing)}")
        if extra:
            raise ValueError(f"function defined on unknown strata {sorted(extra)}")
        return self

    @classmethod
    def from_partial(cls, space: StratSpace, values: Mapping[str, int]) -> "ConstructibleFn":
        """Strata not mentioned get value 0."""
        return cls(space=space, values={name: int(values.get(name, 0)) for name in space.names})

    def value(self, name: str) -> int:
        return self.values[name]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())


class CCCycle(BaseModel):
    """Coefficients a_Y of the conormal cycles [T*_Y X]; zero entries are dropped."""
    space: StratSpace
    coeffs: Dict[str, int] = Field(default_factory=dict)

    @field_validator("coeffs", mode="after")
    def prune_zeros(cls, v: Dict[str, int]) -> Dict[str, int]:
        return {name: c for name, c in v.items() if c != 0}

    def coefficient(self, name: str) -> int:
        return self.coeffs.get(name, 0)

    def is_empty(self) -> bool:
        return not self.coeffs


class FiniteStratMap(BaseModel):
    """
    Combinatorial model of a proper map with finite fibers: each source
    stratum maps onto a target stratum of the same dimension with degree deg(s).
    """
    source: StratSpace
    target: StratSpace
    assignment: Dict[str, str]
    degrees: Dict[str, int]

    @field_validator("degrees")
    def positive_degrees(cls, v: Dict[str, int]) -> Dict[str, int]:
        for name, d in v.items():
            if d <= 0:
                raise ValueError(f"degree over {name} must be positive, got {d}")
        return v

    @property
    def chi_compatible(self) -> bool:
        """chi_c(s) = deg(s) * chi_c(f(s)) for every source stratum."""
        return all(
            self.source.chi_c(s) == self.degrees[s] * self.target.chi_c(t)
            for s, t in self.assignment.items()
        )


class SmoothMapDatum(BaseModel):
    """Combinatorial model of a smooth map: a stratum assignment source -> target."""
    source: StratSpace
    target: StratSpace
    assignment: Dict[str, str]
