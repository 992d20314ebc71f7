from functools import lru_cache

import pytest
import sympy

from csmcheck.models.partition import partitions_of
from csmcheck.services.littlewood_richardson import cache_info, lr_coefficient


def variables(count):
    return sympy.symbols(f"x1:{count + 1}")


@lru_cache(maxsize=None)
def schur_polynomial(lam, count):
    """Bialternant a_{lam+delta} / a_delta in `count` variables."""
    xs = variables(count)
    if len(lam) > count:
        return sympy.Poly(0, *xs)
    padded = list(lam) + [0] * (count - len(lam))
    numerator = sympy.Matrix(count, count, lambda i, j: xs[i] ** (padded[j] + count - 1 - j)).det()
    denominator = sympy.Matrix(count, count, lambda i, j: xs[i] ** (count - 1 - j)).det()
    return sympy.Poly(numerator, *xs).exquo(sympy.Poly(denominator, *xs))


@pytest.mark.parametrize(
    "lam, mu, nu, expected",
    [
        ((1,), (1,), (2,), 1),
        ((1,), (1,), (1, 1), 1),
        ((2, 1), (2, 1), (3, 2, 1), 2),
        ((2, 1), (2, 1), (4, 2), 1),
        ((2,), (2,), (2, 2), 1),
        ((1,), (1,), (3,), 0),
        ((2, 1), (1,), (1, 1, 1), 0),
    ],
)
def test_known_coefficients(lam, mu, nu, expected):
    assert lr_coefficient(lam, mu, nu) == expected


def test_symmetric_in_factors():
    assert lr_coefficient((3, 1), (2, 1), (4, 3, 1)) == lr_coefficient((2, 1), (3, 1), (4, 3, 1))


def test_empty_partition_is_unit():
    assert lr_coefficient((), (2, 1), (2, 1)) == 1
    assert lr_coefficient((), (2, 1), (3,)) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("size", range(9))
def test_schur_product_oracle(k, size):
    # every pair lam, mu with at most k parts and |lam| + |mu| = size
    for left in range(size + 1):
        for lam in partitions_of(left, k, left):
            for mu in partitions_of(size - left, k, size - left):
                nvars = max(1, min(len(lam) + len(mu), k))
                expected = schur_polynomial(lam, nvars) * schur_polynomial(mu, nvars)

                expansion = sympy.Poly(0, *variables(nvars))
                widest = (lam[0] if lam else 0) + (mu[0] if mu else 0)
                for nu in partitions_of(size, nvars, widest):
                    c = lr_coefficient(lam, mu, nu)
                    if c:
                        expansion += c * schur_polynomial(nu, nvars)

                assert expansion == expected, (lam, mu)


def test_cache_info_reports_hits():
    lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    lr_coefficient((2, 1), (2, 1), (3, 2, 1))

    assert "hits" in cache_info()
