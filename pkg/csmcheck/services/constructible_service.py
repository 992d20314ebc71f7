"""
Constructible functions on finite stratified spaces.

Every function is a unique combination phi = sum_Y a_Y (-1)^{dim Y} Eu_Y
of signed local Euler obstructions; the a_Y are the coefficients of the
characteristic cycle CC(phi) = sum_Y a_Y [T*_Y X].
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..core.exceptions import (
    DimensionShiftError,
    InputValidationError,
    MissingClassMapError,
    ModelMismatchError,
    RangeError,
)
from ..models.report import CheckOutcome
from ..models.ring import GradedClass
from ..models.strat import (
    CCCycle,
    EulerTable,
    ConstructibleFn,
    FiniteStratMap,
    SmoothMapDatum,
    StratSpace,
    Stratum,
)
from . import ring_service
from .tangent_service import tangent_class


def _sign(dim: int) -> int:
    return -1 if dim % 2 else 1


def _require_space(phi: ConstructibleFn, space: StratSpace) -> None:
    if phi.space is not space and phi.space != space:
        raise ModelMismatchError("function and Euler data belong to different stratified spaces")


def indicator(space: StratSpace, names: Sequence[str], value: int = 1) -> ConstructibleFn:
    """value * 1_S for the union S of the named strata."""
    for name in names:
        if name not in space.below:
            raise InputValidationError(f"unknown stratum {name}")
    return ConstructibleFn.from_partial(space, {name: value for name in names})


def closure_indicator(space: StratSpace, closure: str) -> ConstructibleFn:
    """1 on the closure of the named stratum."""
    return indicator(space, space.below[closure])


def euler_obstruction(space: StratSpace, closure: str) -> ConstructibleFn:
    """Eu_Y as a constructible function."""
    return ConstructibleFn.from_partial(
        space, {s: space.euler_value(closure, s) for s in space.below[closure]}
    )


def combine(space: StratSpace, terms: Sequence[Tuple[int, ConstructibleFn]]) -> ConstructibleFn:
    values = {name: 0 for name in space.names}
    for c, phi in terms:
        _require_space(phi, space)
        for name in space.names:
            values[name] += c * phi.value(name)
    return ConstructibleFn(space=space, values=values)


def _check_euler_table(space: StratSpace, euler: EulerTable) -> None:
    for t in space.names:
        if euler.value(t, t) != 1:
            raise InputValidationError(f"Eu_{t} must equal 1 on its open stratum")
        stray = sorted(s for s, v in euler.rows.get(t, {}).items() if v != 0 and not space.leq(s, t))
        if stray:
            raise InputValidationError(f"Eu_{t} must vanish outside its closure, got values at {stray}")


def to_cc_coefficients(phi: ConstructibleFn, euler: Optional[EulerTable] = None) -> CCCycle:
    """
    Solve phi = sum_Y a_Y (-1)^{dim Y} Eu_Y by back-substitution.

    Strata are visited by descending dimension; Eu_Y(Y) = 1 makes each step
    a single subtraction.

    Args:
        phi: the function to decompose
        euler: local Euler obstructions to decompose against; defaults to
            the table carried by phi's space

    Returns:
        The characteristic-cycle coefficients a_Y
    """
    space = phi.space
    if euler is None:
        euler = space.euler
    else:
        _check_euler_table(space, euler)
    coeffs: Dict[str, int] = {}
    for y in space.descending():
        # strata whose closure contains y have larger dimension and are solved already
        rest = sum(
            coeffs[t] * _sign(space.dim_of(t)) * euler.value(t, y)
            for t in coeffs
            if t != y and space.leq(y, t)
        )
        coeffs[y] = _sign(space.dim_of(y)) * (phi.value(y) - rest)
    return CCCycle(space=space, coeffs=coeffs)


def reconstruct(cc: CCCycle, euler: Optional[EulerTable] = None) -> ConstructibleFn:
    """The function sum_Y a_Y (-1)^{dim Y} Eu_Y."""
    space = cc.space
    if euler is None:
        euler = space.euler
    else:
        _check_euler_table(space, euler)
    values = {name: 0 for name in space.names}
    for y, a in cc.coeffs.items():
        sign = _sign(space.dim_of(y))
        for s in space.below[y]:
            values[s] += a * sign * euler.value(y, s)
    return ConstructibleFn(space=space, values=values)


def is_effective_cc(cc: CCCycle) -> bool:
    """All a_Y >= 0 with at least one positive; the empty cycle is not effective."""
    return bool(cc.coeffs) and all(a >= 0 for a in cc.coeffs.values())


def euler_characteristic(phi: ConstructibleFn) -> int:
    """chi(Z, phi) = sum_s chi_c(s) phi(s)."""
    return sum(phi.space.chi_c(s) * phi.value(s) for s in phi.space.names)


# Effectivity-preserving operations

def product_space(left: StratSpace, right: StratSpace) -> StratSpace:
    """Product stratification with Eu_{Y x Y'} = Eu_Y x Eu_{Y'}."""
    strata = []
    for s in left.strata:
        for t in right.strata:
            strata.append(Stratum(name=_pair(s.name, t.name), dim=s.dim + t.dim, chi_c=s.chi_c * t.chi_c))
    below = {}
    rows = {}
    for y in left.names:
        for z in right.names:
            members = [_pair(s, t) for s in left.below[y] for t in right.below[z]]
            below[_pair(y, z)] = members
            rows[_pair(y, z)] = {
                _pair(s, t): left.euler_value(y, s) * right.euler_value(z, t)
                for s in left.below[y]
                for t in right.below[z]
            }
    # re-sort closure members into the product's stratum order
    order = {st.name: i for i, st in enumerate(strata)}
    below = {key: sorted(members, key=order.__getitem__) for key, members in below.items()}
    return StratSpace(strata=strata, below=below, euler={"rows": rows})


def _pair(s: str, t: str) -> str:
    return f"{s}×{t}"


def box_product(phi: ConstructibleFn, psi: ConstructibleFn) -> ConstructibleFn:
    """(phi x psi)(s, t) = phi(s) psi(t) on the product space."""
    space = product_space(phi.space, psi.space)
    values = {
        _pair(s, t): phi.value(s) * psi.value(t) for s in phi.space.names for t in psi.space.names
    }
    return ConstructibleFn(space=space, values=values)


def finite_pushforward(f: FiniteStratMap, phi: ConstructibleFn) -> ConstructibleFn:
    """f_*(phi)(t) = sum over s mapping to t of deg(s) phi(s)."""
    _require_space(phi, f.source)
    _validate_finite_map(f)
    values = {t: 0 for t in f.target.names}
    for s, t in f.assignment.items():
        values[t] += f.degrees[s] * phi.value(s)
    if not f.chi_compatible:
        logger.warning("finite map datum is not chi_c-compatible; Euler characteristic may change")
    return ConstructibleFn(space=f.target, values=values)


def _validate_finite_map(f: FiniteStratMap) -> None:
    if set(f.assignment) != set(f.source.names):
        raise InputValidationError("finite map must assign every source stratum")
    if set(f.degrees) != set(f.source.names):
        raise InputValidationError("finite map must give a degree for every source stratum")
    for s, t in f.assignment.items():
        if t not in f.target.below:
            raise InputValidationError(f"{s} maps to unknown stratum {t}")
        if f.source.dim_of(s) != f.target.dim_of(t):
            raise DimensionShiftError(
                f"finite map sends {s} (dim {f.source.dim_of(s)}) to {t} (dim {f.target.dim_of(t)})"
            )


def smooth_pullback(f: SmoothMapDatum, d: int, phi: ConstructibleFn) -> ConstructibleFn:
    """
    (-1)^d phi o f for a smooth map of relative dimension d.

    The datum must shift every stratum dimension by d, preserve the closure
    order, and carry Euler data with f^* Eu_Y = sum of Eu over the strata
    of f^{-1}(Y) lying over the open stratum of Y. Then the characteristic
    cycle pulls back coefficientwise: a'_{s'} = a_{f(s')}.
    """
    _require_space(phi, f.target)
    validate_smooth_datum(f, d)
    sign = _sign(d)
    values = {s: sign * phi.value(t) for s, t in f.assignment.items()}
    return ConstructibleFn(space=f.source, values=values)


def validate_smooth_datum(f: SmoothMapDatum, d: int) -> None:
    if d < 0:
        raise RangeError(f"relative dimension must be non-negative, got {d}")
    src, tgt = f.source, f.target
    if set(f.assignment) != set(src.names):
        raise InputValidationError("smooth map must assign every source stratum")
    for s, t in f.assignment.items():
        if t not in tgt.below:
            raise InputValidationError(f"{s} maps to unknown stratum {t}")
        if src.dim_of(s) != tgt.dim_of(t) + d:
            raise DimensionShiftError(
                f"{s} has dim {src.dim_of(s)} but lies over {t} of dim {tgt.dim_of(t)} with d={d}"
            )
    for s in src.names:
        for r in src.below[s]:
            if not tgt.leq(f.assignment[r], f.assignment[s]):
                raise InputValidationError(f"map does not preserve closure order at {r} <= {s}")
    for r in src.names:
        for t in tgt.names:
            pulled = sum(
                src.euler_value(s, r)
                for s, image in f.assignment.items()
                if image == t and src.leq(r, s)
            )
            expected = tgt.euler_value(t, f.assignment[r])
            if pulled != expected:
                raise InputValidationError(
                    f"Euler data is not pulled back at {r} over {t}: {pulled} != {expected}"
                )


def product_projection(space: StratSpace, factor: StratSpace) -> SmoothMapDatum:
    """The projection space x factor -> space."""
    source = product_space(space, factor)
    assignment = {_pair(s, t): s for s in space.names for t in factor.names}
    return SmoothMapDatum(source=source, target=space, assignment=assignment)


def behrend_function(space: StratSpace, components: Sequence[Tuple[str, int]]) -> ConstructibleFn:
    """nu = sum_Y (-1)^{dim Y} mult(Y) Eu_Y over the supports Y."""
    if not components:
        raise InputValidationError("Behrend function needs at least one component")
    seen = set()
    terms = []
    for closure, mult in components:
        if closure not in space.below:
            raise InputValidationError(f"unknown support {closure}")
        if closure in seen:
            raise InputValidationError(f"support {closure} listed twice")
        if mult <= 0:
            raise RangeError(f"multiplicity of {closure} must be positive, got {mult}")
        seen.add(closure)
        terms.append((_sign(space.dim_of(closure)) * mult, euler_obstruction(space, closure)))
    return combine(space, terms)


def virtual_euler_characteristic(space: StratSpace, components: Sequence[Tuple[str, int]]) -> int:
    return euler_characteristic(behrend_function(space, components))


# Classes

def class_of(phi: ConstructibleFn) -> GradedClass:
    """c_*(phi) = sum_Y a_Y (-1)^{dim Y} c_Ma(Y)."""
    space = phi.space
    if space.ring is None:
        raise MissingClassMapError("stratified space has no ambient ring")
    cc = to_cc_coefficients(phi)
    result = GradedClass.zero(space.ring)
    for y, a in cc.coeffs.items():
        if y not in space.class_map:
            raise MissingClassMapError(f"no Chern-Mather class for the closure of {y}")
        term = ring_service.scale(space.class_map[y], a * _sign(space.dim_of(y)))
        result = ring_service.add(result, term)
    return result


def ssm_of(phi: ConstructibleFn, c_tx: Optional[GradedClass] = None) -> GradedClass:
    """s_*(phi, X) = c(TX)^{-1} cap c_*(phi)."""
    c_star = class_of(phi)
    c_tx = c_tx if c_tx is not None else tangent_class(c_star.ring)
    return ring_service.multiply(ring_service.invert_unit(c_tx), c_star)


def signed_class_of(phi: ConstructibleFn) -> GradedClass:
    return ring_service.check_signs(class_of(phi))


def signed_ssm_of(phi: ConstructibleFn, c_tx: Optional[GradedClass] = None) -> GradedClass:
    return ring_service.check_signs(ssm_of(phi, c_tx))


def signed_segre_mather(space: StratSpace, closure: str) -> GradedClass:
    """(-1)^{dim Y} times the signed Segre-Mather class of Y."""
    if space.ring is None or closure not in space.class_map:
        raise MissingClassMapError(f"no Chern-Mather class for the closure of {closure}")
    c_tx = tangent_class(space.ring)
    segre = ring_service.multiply(ring_service.invert_unit(c_tx), space.class_map[closure])
    return ring_service.scale(ring_service.check_signs(segre), _sign(space.dim_of(closure)))


def positivity_report(phi: ConstructibleFn) -> List[CheckOutcome]:
    """
    Effectivity checks for phi and for the closures with class data.

    The ambient spaces in scope have globally generated tangent bundles,
    so an effective CC(phi) forces an effective signed SSM class, and each
    (-1)^{dim Y} times the signed Segre-Mather class of Y is effective.
    """
    outcomes: List[CheckOutcome] = []
    cc = to_cc_coefficients(phi)
    effective = is_effective_cc(cc)
    outcomes.append(
        CheckOutcome.info(
            "cc_effective",
            effective,
            {"coefficients": {y: str(a) for y, a in cc.coeffs.items()}},
        )
    )
    space = phi.space
    if not space.has_classes():
        outcomes.append(CheckOutcome.skip("signed_ssm_effective", "no class_map in the poset"))
        return outcomes

    missing = sorted(y for y in cc.coeffs if y not in space.class_map)
    if effective and missing:
        outcomes.append(CheckOutcome.skip("signed_ssm_effective", f"no class data for {', '.join(missing)}"))
    elif effective:
        signed = signed_ssm_of(phi)
        outcomes.append(
            CheckOutcome.expect(
                "signed_ssm_effective",
                ring_service.is_effective(signed),
                {"class": ring_service.to_pairs(signed)},
            )
        )
    else:
        outcomes.append(CheckOutcome.skip("signed_ssm_effective", "characteristic cycle is not effective"))

    failures = {}
    for closure in space.names:
        if closure not in space.class_map:
            continue
        cls_ = signed_segre_mather(space, closure)
        if not ring_service.is_effective(cls_):
            failures[closure] = ring_service.to_pairs(cls_)
    outcomes.append(CheckOutcome.expect("signed_segre_mather_effective", not failures, failures))
    logger.debug(f"positivity report: {[(o.name, o.status) for o in outcomes]}")
    return outcomes
