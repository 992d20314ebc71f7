"""
Complements of hyperplane arrangements in P^n.

The intersection lattice of the central arrangement in C^{n+1} gives the
Poincare polynomial pi(t) = sum_z mu(z) (-t)^{codim z}. Then

    c_SM(U) = pi(-h/(1+h)) (1+h)^{n+1} cap [P^n]
    (-1)^n signed s_SM(U, P^n) = pi(h/(1-h)) cap [P^n]

and the second class is effective.
"""

from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..core.exceptions import InvariantViolationError
from ..models.arrangement import (
    Arrangement,
    IntersectionLattice,
    LatticeElement,
    PoincarePolynomial,
    primitive_row,
)
from ..models.report import CheckOutcome
from ..models.ring import GradedClass, RingModel
from . import ring_service
from .tangent_service import tangent_class_projective


def _to_qq(v) -> object:
    q = Fraction(v)
    return QQ(q.numerator, q.denominator)


def _domain_matrix(rows: Sequence[Sequence], width: int) -> DomainMatrix:
    return DomainMatrix([[_to_qq(v) for v in row] for row in rows], (len(rows), width), QQ)


def _rational_rows(dm: DomainMatrix) -> List[List[Fraction]]:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in dm.to_Matrix().tolist()]


def canonical_form(rows: Sequence[Sequence], width: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Canonical equations of the subspace cut out by `rows`.

    The reduced row-echelon form is unique for a row space; each of its
    rows is scaled to coprime integers with positive leading entry.
    """
    if not rows:
        return ()
    rref, pivots = _domain_matrix(rows, width).rref()
    reduced = _rational_rows(rref)
    return tuple(primitive_row(reduced[i]) for i in range(len(pivots)))


def _flat_basis(equations: Sequence[Sequence[int]], width: int) -> List[List[Fraction]]:
    """A basis of the subspace of C^{n+1} on which the equations vanish."""
    if not equations:
        return [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
    return _rational_rows(_domain_matrix(equations, width).nullspace())


def _restrict(row: Sequence[int], basis: Sequence[Sequence[Fraction]]) -> Tuple[Fraction, ...]:
    return tuple(sum(Fraction(a) * b for a, b in zip(row, v)) for v in basis)


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def contains_hyperplane(equations: Sequence[Sequence[int]], hyperplane: Sequence[int], width: int) -> bool:
    """True when the flat cut out by `equations` lies inside `hyperplane`."""
    return len(canonical_form(list(equations) + [hyperplane], width)) == len(canonical_form(equations, width))


def flat_hyperplanes(a: Arrangement, equations: Sequence[Sequence[int]]) -> FrozenSet[int]:
    """Indices of the hyperplanes containing the flat; they determine the flat."""
    width = a.n + 1
    return frozenset(i for i, h in enumerate(a.hyperplanes) if contains_hyperplane(equations, h, width))


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """
    The intersection lattice with Mobius values mu(0, z).

    Flats are grown by a worklist: meeting a flat F with a hyperplane H not
    containing it gives the flat cut out by H restricted to F, and the
    hyperplanes containing the result are those whose restriction to F is
    proportional to that of H.
    """
    width = a.n + 1
    bottom = LatticeElement(hyperplanes=frozenset(), equations=(), codim=0)
    found: Dict[FrozenSet[int], LatticeElement] = {bottom.hyperplanes: bottom}
    worklist = [bottom]
    while worklist:
        flat = worklist.pop()
        basis = _flat_basis(flat.equations, width)
        restricted = [_restrict(h, basis) for h in a.hyperplanes]
        for i in range(a.size):
            if i in flat.hyperplanes:
                continue
            key = flat.hyperplanes | frozenset(
                j for j in range(a.size) if j not in flat.hyperplanes and _proportional(restricted[i], restricted[j])
            )
            if key in found:
                continue
            equations = canonical_form(list(flat.equations) + [a.hyperplanes[i]], width)
            element = LatticeElement(hyperplanes=key, equations=equations, codim=len(equations))
            found[key] = element
            worklist.append(element)

    elements = sorted(found.values(), key=lambda e: (e.codim, sorted(e.hyperplanes)))
    for z in elements:
        if z.codim == 0:
            z.mobius = 1
            continue
        z.mobius = -sum(y.mobius for y in elements if y.codim < z.codim and y.hyperplanes <= z.hyperplanes)
    logger.debug(f"Intersection lattice of {a.size} hyperplanes in P^{a.n}: {len(elements)} flats")
    return IntersectionLattice(arrangement=a, elements=elements)


def poincare_polynomial(lattice: IntersectionLattice) -> PoincarePolynomial:
    """pi(t) = sum_z mu(z) (-t)^{codim z}; non-negative with constant term 1."""
    coefficients = [0] * (lattice.rank + 1)
    for z in lattice.elements:
        coefficients[z.codim] += z.mobius * (-1) ** z.codim
    if coefficients[0] != 1 or any(c < 0 for c in coefficients):
        logger.error(f"Poincare polynomial {coefficients} violates positivity")
        raise InvariantViolationError(f"Poincare polynomial {coefficients} must be non-negative with constant term 1")
    return PoincarePolynomial(coefficients=coefficients)


def characteristic_polynomial(lattice: IntersectionLattice) -> List[int]:
    """chi(q) = sum_z mu(z) q^{n+1-codim z}, as coefficients of q^0, q^1, ..."""
    width = lattice.arrangement.n + 1
    coefficients = [0] * (width + 1)
    for z in lattice.elements:
        coefficients[width - z.codim] += z.mobius
    return coefficients


def csm_complement(a: Arrangement, pi: Optional[PoincarePolynomial] = None) -> GradedClass:
    """c_SM(U) = sum_k b_k (-h)^k (1+h)^{n+1-k} cap [P^n]."""
    pi = pi or poincare_polynomial(build_lattice(a))
    ring = RingModel.projective(a.n)
    h = ring_service.hyperplane_power(ring, 1)
    one_plus_h = ring_service.add(ring_service.unit(ring), h)
    result = GradedClass.zero(ring)
    for k, b in enumerate(pi.coefficients):
        term = ring_service.multiply(
            ring_service.power(ring_service.scale(h, -1), k),
            ring_service.power(one_plus_h, a.n + 1 - k),
        )
        result = ring_service.add(result, ring_service.scale(term, b))
    return result


def ssm_signed_complement(a: Arrangement, pi: Optional[PoincarePolynomial] = None) -> GradedClass:
    """pi(h/(1-h)) cap [P^n], which is (-1)^n times the signed SSM class of U."""
    pi = pi or poincare_polynomial(build_lattice(a))
    ring = RingModel.projective(a.n)
    h = ring_service.hyperplane_power(ring, 1)
    t = ring_service.multiply(h, ring_service.invert_unit(ring_service.subtract(ring_service.unit(ring), h)))
    return ring_service.compose_polynomial(pi.coefficients, t)


def signed_ssm_from_csm(csm: GradedClass) -> GradedClass:
    """(-1)^n checkSigns(c(T P^n)^{-1} cap c_SM(U))."""
    n = csm.ring.n
    ssm = ring_service.multiply(ring_service.invert_unit(tangent_class_projective(n)), csm)
    return ring_service.scale(ring_service.check_signs(ssm), (-1) ** n)


def euler_characteristic_by_inclusion_exclusion(a: Arrangement) -> int:
    """
    chi(U) = sum over subsets S of (-1)^{|S|} chi(cap_S H); a rank-r
    intersection is a P^{n-r}, empty when r = n + 1.
    """
    width = a.n + 1
    total = 0
    for size in range(a.size + 1):
        for subset in combinations(a.hyperplanes, size):
            rank = len(canonical_form(list(subset), width))
            total += (-1) ** size * (width - rank)
    return total


def euler_characteristic_from_poincare(a: Arrangement, pi: Optional[PoincarePolynomial] = None) -> int:
    """
    chi(U) as the value at t = -1 of pi(t) / (1 + t), the Poincare
    polynomial of the projective complement. With no hyperplanes U = P^n.
    """
    if a.size == 0:
        return a.n + 1
    pi = pi or poincare_polynomial(build_lattice(a))
    coefficients = pi.coefficients
    # divide by 1 + t from the top: c_i = q_i + q_{i-1}
    quotient = [0] * (len(coefficients) - 1)
    carry = 0
    for i in range(len(coefficients) - 1, 0, -1):
        carry = coefficients[i] - carry
        quotient[i - 1] = carry
    if coefficients[0] != carry:
        raise InvariantViolationError(f"1 + t does not divide the Poincare polynomial {pi}")
    return PoincarePolynomial(coefficients=quotient).evaluate(-1)


def mobius_check(lattice: IntersectionLattice) -> CheckOutcome:
    """sum_{y <= z} mu(y) = 0 for z above the bottom, and (-1)^{codim z} mu(z) > 0."""
    witnesses = []
    for z in lattice.elements:
        if z.codim == 0:
            continue
        total = sum(y.mobius for y in lattice.elements if lattice.leq(y, z))
        if total != 0 or (-1) ** z.codim * z.mobius <= 0:
            witnesses.append({"flat": z.label(), "mobius": str(z.mobius), "sum": str(total)})
    return CheckOutcome.expect("mobius", not witnesses, witnesses)


def effectivity_report(a: Arrangement) -> Tuple[Dict[str, object], List[CheckOutcome]]:
    """
    Classes of the complement and the checks on them.

    Returns:
        The report data (Poincare and characteristic polynomials, csm,
        signed ssm, effectivity, Euler characteristic) and the check outcomes
    """
    lattice = build_lattice(a)
    pi = poincare_polynomial(lattice)
    csm = csm_complement(a, pi)
    signed = ssm_signed_complement(a, pi)
    chi = ring_service.degree_of(csm)
    chi_oracle = euler_characteristic_by_inclusion_exclusion(a)
    chi_poincare = euler_characteristic_from_poincare(a, pi)
    effective = ring_service.is_effective(signed)
    from_csm = signed_ssm_from_csm(csm)

    checks = [
        mobius_check(lattice),
        CheckOutcome.expect(
            "signed_ssm_effective", effective, None if effective else {"class": ring_service.to_pairs(signed)}
        ),
        CheckOutcome.expect(
            "signed_ssm_consistency",
            signed == from_csm,
            None if signed == from_csm else {"from_csm": ring_service.to_pairs(from_csm)},
        ),
        CheckOutcome.expect(
            "euler_characteristic",
            chi == chi_oracle == chi_poincare,
            {"degree": str(chi), "inclusion_exclusion": str(chi_oracle), "poincare": str(chi_poincare)},
        ),
    ]
    if not effective:
        logger.error(f"signed SSM class {signed} of an arrangement complement is not effective")
    data = {
        "n": str(a.n),
        "hyperplanes": [[str(v) for v in row] for row in a.hyperplanes],
        "flats": str(len(lattice.elements)),
        "poincare": [str(c) for c in pi.coefficients],
        "characteristic": [str(c) for c in characteristic_polynomial(lattice)],
        "csm": ring_service.to_pairs(csm),
        "ssm_signed": ring_service.to_pairs(signed),
        "effective": effective,
        "euler_characteristic": str(chi),
    }
    return data, checks
