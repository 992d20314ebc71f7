import pytest

from csmcheck.core.exceptions import ContainmentError
from csmcheck.models.partition import (
    Rectangle,
    contains,
    dual_in_rectangle,
    label,
    make_partition,
    partitions_in_rectangle,
    partitions_of,
)


def test_canonical_order_of_gr25_basis():
    assert partitions_in_rectangle(2, 3) == (
        (), (1,), (2,), (1, 1), (3,), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3),
    )


def test_dual_in_rectangle():
    rect = Rectangle(2, 3)

    assert dual_in_rectangle((1,), rect) == (3, 2)
    assert dual_in_rectangle((), rect) == (3, 3)
    assert all(dual_in_rectangle(dual_in_rectangle(lam, rect), rect) == lam for lam in partitions_in_rectangle(2, 3))
    with pytest.raises(ContainmentError):
        dual_in_rectangle((4,), rect)


def test_contains():
    assert contains((3, 1), (2, 1))
    assert contains((3, 1), ())
    assert not contains((3,), (1, 1))


def test_make_partition():
    assert make_partition([2, 1, 0, 0]) == (2, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])


def test_partitions_of():
    assert partitions_of(2, 2, 3) == ((2,), (1, 1))


def test_label():
    assert label((3, 1)) == "(3,1)"
    assert label(()) == "∅"
