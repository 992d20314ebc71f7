from math import comb

import pytest

from csmcheck.core.exceptions import RangeError
from csmcheck.models.ring import GradedClass, RingModel
from csmcheck.services import ring_service
from csmcheck.services.cell_classes_service import transport_to_grassmannian
from csmcheck.services.tangent_service import (
    tangent_chern_class_grassmannian,
    tangent_class,
    tangent_class_projective,
)


def test_projective_tangent_class():
    assert tangent_class_projective(2) == ring_service.from_polynomial(RingModel.projective(2), [1, 3, 3])
    assert tangent_class_projective(0) == ring_service.unit(RingModel.projective(0))


def test_gr12_is_the_projective_line():
    ring = RingModel.grassmannian(1, 2)

    assert tangent_chern_class_grassmannian(1, 2) == GradedClass.build(ring, {(1,): 1, (): 2})


def test_gr24_first_chern_class(gr24):
    c = tangent_chern_class_grassmannian(2, 4)

    assert c.coefficient((2, 2)) == 1
    # c_1 = 4 sigma_1 and sigma_1 = [X(2,1)]
    assert c.coefficient((2, 1)) == 4
    assert ring_service.degree_of(c) == 6


@pytest.mark.parametrize("k, n", [(1, 3), (2, 4), (2, 5), (3, 5), (2, 6), (3, 6)])
def test_degree_is_euler_characteristic(k, n):
    assert ring_service.degree_of(tangent_chern_class_grassmannian(k, n)) == comb(n, k)


@pytest.mark.parametrize("k, n", [(2, 5), (3, 6)])
def test_first_chern_class_is_n_sigma_one(k, n):
    ring = RingModel.grassmannian(k, n)
    c = tangent_chern_class_grassmannian(k, n)
    sigma1 = ring_service.schur_class(ring, (1,))

    codim_one = ring_service.homogeneous_component(c, ring.dim - 1)

    assert codim_one == ring_service.scale(sigma1, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_lines_agree_with_projective_space(n):
    assert tangent_chern_class_grassmannian(1, n + 1) == transport_to_grassmannian(tangent_class_projective(n))


def test_duality_gr_k_n_and_gr_n_minus_k():
    # Gr(2,5) = Gr(3,5); the isomorphism transposes partitions
    left = tangent_chern_class_grassmannian(2, 5)
    right = tangent_chern_class_grassmannian(3, 5)

    def transpose(lam):
        return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()

    assert {transpose(key): c for key, c in left.coeffs.items()} == right.coeffs


def test_dispatch_by_ring(gr25, p2):
    assert tangent_class(gr25) == tangent_chern_class_grassmannian(2, 5)
    assert tangent_class(p2) == tangent_class_projective(2)


def test_invalid_grassmannian():
    with pytest.raises(RangeError):
        tangent_chern_class_grassmannian(3, 3)
    with pytest.raises(RangeError):
        tangent_class_projective(-1)
