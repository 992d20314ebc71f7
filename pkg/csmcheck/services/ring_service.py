"""
Arithmetic in the truncated Chow rings of P^n and Gr(k, n).

Classes are stored in homological-dimension bases: h^c has dimension
n - c, and the Schubert class [X(lam)] has dimension |lam|. The
fundamental class is the multiplicative unit.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from loguru import logger

from ..core.exceptions import ContainmentError, ModelMismatchError, NonUnitError, RangeError
from ..models.partition import dual_in_rectangle, fits_in, partitions_of
from ..models.ring import BasisKey, GradedClass, RingModel
from .littlewood_richardson import lr_coefficient


def _require_same_ring(x: GradedClass, y: GradedClass) -> RingModel:
    if x.ring != y.ring:
        raise ModelMismatchError(f"cannot combine classes of {x.ring.describe()} and {y.ring.describe()}")
    return x.ring


def add(x: GradedClass, y: GradedClass) -> GradedClass:
    ring = _require_same_ring(x, y)
    coeffs = dict(x.coeffs)
    for key, c in y.coeffs.items():
        coeffs[key] = coeffs.get(key, 0) + c
    return GradedClass.build(ring, coeffs)


def subtract(x: GradedClass, y: GradedClass) -> GradedClass:
    return add(x, negate(y))


def negate(x: GradedClass) -> GradedClass:
    return scale(x, -1)


def scale(x: GradedClass, factor: int) -> GradedClass:
    return GradedClass.build(x.ring, {key: factor * c for key, c in x.coeffs.items()})


def total(classes: Iterable[GradedClass], ring: RingModel) -> GradedClass:
    result = GradedClass.zero(ring)
    for x in classes:
        result = add(result, x)
    return result


def multiply(x: GradedClass, y: GradedClass) -> GradedClass:
    """Intersection product; h^{n+1} = 0 and partitions outside the rectangle vanish."""
    ring = _require_same_ring(x, y)
    coeffs: Dict[BasisKey, int] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            for key, c in _basis_product(ring, a, b):
                coeffs[key] = coeffs.get(key, 0) + ca * cb * c
    return GradedClass.build(ring, coeffs)


def _basis_product(ring: RingModel, a: BasisKey, b: BasisKey) -> Tuple[Tuple[BasisKey, int], ...]:
    if ring.is_projective:
        c = a + b
        return ((c, 1),) if c <= ring.n else ()
    return _schubert_product(ring.k, ring.n, a, b)


@lru_cache(maxsize=None)
def _schubert_product(k: int, n: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[Tuple[BasisKey, int], ...]:
    # [X(a)] = sigma_{a^v}; multiply the cohomology indices by LR and dualize back
    rect = RingModel.grassmannian(k, n).rectangle
    alpha = dual_in_rectangle(a, rect)
    beta = dual_in_rectangle(b, rect)
    degree = sum(alpha) + sum(beta)
    if degree > rect.area:
        return ()
    terms = []
    for gamma in partitions_of(degree, rect.rows, rect.cols):
        c = lr_coefficient(alpha, beta, gamma)
        if c:
            terms.append((dual_in_rectangle(gamma, rect), c))
    return tuple(terms)


def power(x: GradedClass, exponent: int) -> GradedClass:
    if exponent < 0:
        return power(invert_unit(x), -exponent)
    result = unit(x.ring)
    for _ in range(exponent):
        result = multiply(result, x)
    return result


def check_signs(x: GradedClass) -> GradedClass:
    """Negate every homogeneous component of odd dimension."""
    ring = x.ring
    return GradedClass.build(
        ring, {key: (-c if ring.dim_of(key) % 2 else c) for key, c in x.coeffs.items()}
    )


def invert_unit(u: GradedClass) -> GradedClass:
    """
    Inverse of a class of the form +-1 + a with a nilpotent.

    Args:
        u: class whose coefficient on the fundamental class is +1 or -1

    Returns:
        The class v with u * v equal to the fundamental class
    """
    ring = u.ring
    lead = u.coefficient(ring.fundamental_key)
    if lead not in (1, -1):
        raise NonUnitError(
            f"leading coefficient {lead} on {ring.label(ring.fundamental_key)} is not a unit"
        )
    # u = lead * (1 + lead*a), so u^{-1} = lead * sum_i (-lead*a)^i
    nilpotent = subtract(scale(u, lead), unit(ring))
    step = scale(nilpotent, -1)
    term = unit(ring)
    inverse = unit(ring)
    for _ in range(ring.dim):
        term = multiply(term, step)
        if term.is_zero():
            break
        inverse = add(inverse, term)
    return scale(inverse, lead)


def is_effective(x: GradedClass) -> bool:
    """Nonzero with every coefficient non-negative."""
    return bool(x.coeffs) and all(c >= 0 for c in x.coeffs.values())


def degree_of(x: GradedClass) -> int:
    return x.coefficient(x.ring.point_key)


def homogeneous_component(x: GradedClass, dim: int) -> GradedClass:
    ring = x.ring
    return GradedClass.build(ring, {key: c for key, c in x.coeffs.items() if ring.dim_of(key) == dim})


# Constructors

def unit(ring: RingModel) -> GradedClass:
    return GradedClass.build(ring, {ring.fundamental_key: 1})


def point_class(ring: RingModel) -> GradedClass:
    return GradedClass.build(ring, {ring.point_key: 1})


def basis_class(ring: RingModel, key: BasisKey) -> GradedClass:
    if not ring.has_key(key):
        raise ContainmentError(f"{key!r} is not a basis index of {ring.describe()}")
    return GradedClass.build(ring, {key: 1})


def hyperplane_power(ring: RingModel, c: int) -> GradedClass:
    """h^c cap [P^n]; zero once c exceeds n."""
    if not ring.is_projective:
        raise ModelMismatchError("hyperplane powers live in projective models")
    if c < 0:
        raise RangeError(f"negative power {c}")
    return GradedClass.build(ring, {c: 1} if c <= ring.n else {})


def projective_class(ring: RingModel, d: int) -> GradedClass:
    """[P^d] in P^n."""
    if not 0 <= d <= ring.n:
        raise RangeError(f"[P^{d}] does not exist in P^{ring.n}")
    return hyperplane_power(ring, ring.n - d)


def schubert_class(ring: RingModel, lam: Sequence[int]) -> GradedClass:
    """[X(lam)], of dimension |lam|."""
    lam = tuple(lam)
    if ring.is_projective:
        raise ModelMismatchError("Schubert partitions index Grassmannian models")
    if not fits_in(lam, ring.rectangle):
        raise ContainmentError(f"{lam} does not fit in the {ring.rectangle.rows}x{ring.rectangle.cols} rectangle")
    return GradedClass.build(ring, {lam: 1})


def schur_class(ring: RingModel, lam: Sequence[int]) -> GradedClass:
    """The cohomology class sigma_lam = [X(lam^v)], of codimension |lam|."""
    if ring.is_projective:
        raise ModelMismatchError("Schur classes index Grassmannian models")
    return schubert_class(ring, dual_in_rectangle(tuple(lam), ring.rectangle))


def from_polynomial(ring: RingModel, coefficients: Sequence[int]) -> GradedClass:
    """sum_c coefficients[c] h^c cap [P^n], truncated at h^{n+1}."""
    if not ring.is_projective:
        raise ModelMismatchError("polynomials in h describe projective classes")
    return GradedClass.build(ring, {c: a for c, a in enumerate(coefficients) if c <= ring.n})


def compose_polynomial(coefficients: Sequence[int], t: GradedClass) -> GradedClass:
    """Evaluate sum_k coefficients[k] t^k in the ring by Horner's rule."""
    result = GradedClass.zero(t.ring)
    for a in reversed(list(coefficients)):
        result = add(multiply(result, t), scale(unit(t.ring), a))
    return result


# Serialization

def to_pairs(x: GradedClass) -> List[Tuple[object, str]]:
    """(basis index, decimal string) pairs in canonical basis order."""
    pairs = []
    for key in x.support():
        index = list(key) if isinstance(key, tuple) else key
        pairs.append((index, str(x.coeffs[key])))
    return pairs


def from_pairs(ring: RingModel, pairs: Iterable[Tuple[object, object]]) -> GradedClass:
    coeffs: Dict[BasisKey, int] = {}
    for index, value in pairs:
        key = tuple(index) if isinstance(index, (list, tuple)) else int(index)
        coeffs[key] = coeffs.get(key, 0) + int(str(value))
    logger.debug(f"Deserialized class with {len(coeffs)} terms in {ring.describe()}")
    return GradedClass(ring=ring, coeffs=coeffs)


def from_dense(ring: RingModel, values: Sequence[int]) -> GradedClass:
    """Class from a coefficient list in canonical basis order."""
    if len(values) != len(ring.basis):
        raise ModelMismatchError(
            f"{ring.describe()} has {len(ring.basis)} basis classes, got {len(values)} coefficients"
        )
    return GradedClass.build(ring, dict(zip(ring.basis, values)))
