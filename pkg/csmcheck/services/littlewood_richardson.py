"""
Littlewood-Richardson coefficients by counting LR tableaux.

c^nu_{lam,mu} is the number of semistandard fillings of the skew shape
nu/lam with content mu whose reverse reading word (rows top to bottom,
each row right to left) is a lattice word.
"""

from functools import lru_cache
from typing import List, Tuple

from loguru import logger

from ..core.config import settings
from ..models.partition import contains


def lr_coefficient(lam: Tuple[int, ...], mu: Tuple[int, ...], nu: Tuple[int, ...]) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    # c^nu_{lam,mu} = c^nu_{mu,lam}; fill the smaller skew shape's content
    if (lam, mu) > (mu, lam):
        lam, mu = mu, lam
    return _count_tableaux(lam, mu, nu)


@lru_cache(maxsize=settings.LR_CACHE_SIZE)
def _count_tableaux(lam: Tuple[int, ...], mu: Tuple[int, ...], nu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if lam == nu else 0

    padded_lam = list(lam) + [0] * (len(nu) - len(lam))
    # cells of nu/lam in reverse reading order
    cells: List[Tuple[int, int]] = []
    for r, row_len in enumerate(nu):
        for c in range(row_len - 1, padded_lam[r] - 1, -1):
            cells.append((r, c))

    filling = {}
    counts = [0] * (len(mu) + 1)  # counts[v] for v = 1..len(mu)
    total = 0

    def place(i: int) -> None:
        nonlocal total
        if i == len(cells):
            total += 1
            return
        r, c = cells[i]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)  # rows weakly increase left to right
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1  # columns strictly increase downward
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice condition
            counts[v] += 1
            filling[(r, c)] = v
            place(i + 1)
            del filling[(r, c)]
            counts[v] -= 1

    place(0)
    return total


def cache_info() -> str:
    info = _count_tableaux.cache_info()
    logger.debug(f"LR memo: {info}")
    return str(info)
