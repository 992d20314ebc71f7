import pytest

from csmcheck.models.ring import GradedClass, RingModel


def test_projective_basis_runs_from_point_to_fundamental(p2):
    assert p2.basis == (2, 1, 0)
    assert p2.point_key == 2
    assert p2.fundamental_key == 0
    assert p2.dim_of(1) == 1


def test_grassmannian_model(gr25):
    assert gr25.dim == 6
    assert gr25.fundamental_key == (3, 3)
    assert gr25.in_closure((2, 1), (3, 1))
    assert not gr25.in_closure((3,), (2, 2))


def test_invalid_models():
    with pytest.raises(ValueError):
        RingModel.grassmannian(0, 3)
    with pytest.raises(ValueError):
        RingModel(kind="projective", n=2, k=1)


def test_graded_class_drops_zeros_and_checks_keys(gr24):
    x = GradedClass(ring=gr24, coeffs={(1,): 0, (2, 1): 3})

    assert x.coeffs == {(2, 1): 3}
    assert x.top_dimension() == 3
    with pytest.raises(ValueError):
        GradedClass(ring=gr24, coeffs={(3,): 1})


def test_operators(p2):
    one = GradedClass(ring=p2, coeffs={0: 1})
    h = GradedClass(ring=p2, coeffs={1: 1})

    assert (one + h) * (one - h) == GradedClass(ring=p2, coeffs={0: 1, 2: -1})
    assert -h == GradedClass(ring=p2, coeffs={1: -1})
