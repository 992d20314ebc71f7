"""
Total Chern classes of tangent bundles of the ambient spaces.

For Gr(k, n) with tautological subbundle S and quotient Q (rank m = n - k),
TX = Hom(S, Q) has Chern roots x_i + y_j where x are the roots of S^v and
y those of Q. The relation c(S)c(Q) = 1 gives e_r(y) = h_r(x), so

    c(TX) = prod_i sum_{r <= m} h_r(x) (1 + x_i)^{m - r},

a symmetric polynomial in x alone. Its Schur expansion is read off
from the antisymmetrization: the coefficient of s_lam is the coefficient
of x^{lam + delta} in c(TX) * prod_{i<j} (x_i - x_j).
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Tuple

import sympy
from loguru import logger

from ..core.exceptions import RangeError
from ..models.partition import dual_in_rectangle, partitions_in_rectangle
from ..models.ring import GradedClass, RingModel
from . import ring_service


def tangent_class(ring: RingModel) -> GradedClass:
    """c(TX) cap [X] for the ambient space of `ring`."""
    if ring.is_projective:
        return tangent_class_projective(ring.n)
    return tangent_chern_class_grassmannian(ring.k, ring.n)


def tangent_class_projective(n: int) -> GradedClass:
    """(1 + h)^{n+1} cap [P^n]."""
    if n < 0:
        raise RangeError(f"P^{n} does not exist")
    ring = RingModel.projective(n)
    return ring_service.from_polynomial(ring, [comb(n + 1, c) for c in range(n + 1)])


def tangent_chern_class_grassmannian(k: int, n: int) -> GradedClass:
    """
    Schubert expansion of c(T Gr(k, n)) cap [Gr(k, n)].

    Args:
        k: dimension of the parametrized subspaces
        n: dimension of the ambient vector space

    Returns:
        The class sum_lam c_lam sigma_lam, written in the dimension basis
        as sum_lam c_lam [X(lam^v)]
    """
    if not 1 <= k < n:
        raise RangeError(f"Gr(k, n) requires 1 <= k < n, got k={k}, n={n}")
    ring = RingModel.grassmannian(k, n)
    coefficients = _schur_coefficients(k, n)
    return GradedClass.build(
        ring, {dual_in_rectangle(lam, ring.rectangle): int(c) for lam, c in coefficients.items()}
    )


@lru_cache(maxsize=None)
def _schur_coefficients(k: int, n: int) -> Dict[Tuple[int, ...], int]:
    m = n - k
    xs = sympy.symbols(f"x1:{k + 1}")
    gens = xs

    def complete(r: int) -> sympy.Poly:
        if r == 0:
            return sympy.Poly(1, *gens)
        terms = (sympy.Mul(*combo) for combo in combinations_with_replacement(xs, r))
        return sympy.Poly(sympy.Add(*terms), *gens)

    h = [complete(r) for r in range(m + 1)]
    chern = sympy.Poly(1, *gens)
    for x in xs:
        one_plus = sympy.Poly(1 + x, *gens)
        factor = sympy.Poly(0, *gens)
        for r in range(m + 1):
            factor += h[r] * one_plus ** (m - r)
        chern *= factor

    vandermonde = sympy.Poly(1, *gens)
    for i in range(k):
        for j in range(i + 1, k):
            vandermonde *= sympy.Poly(xs[i] - xs[j], *gens)

    monomials = (chern * vandermonde).as_dict()
    delta = tuple(range(k - 1, -1, -1))
    coefficients = {}
    for lam in partitions_in_rectangle(k, m):
        padded = tuple(lam) + (0,) * (k - len(lam))
        exponent = tuple(p + d for p, d in zip(padded, delta))
        c = monomials.get(exponent, 0)
        if c:
            coefficients[lam] = int(c)
    logger.debug(f"c(T Gr({k},{n})) has {len(coefficients)} Schur terms")
    return coefficients
