"""Young-diagram indices for Grassmannian Schubert bases."""

from functools import lru_cache
from typing import Annotated, Iterable, List, NamedTuple, Tuple

from pydantic import AfterValidator

from ..core.exceptions import ContainmentError


def _check_partition(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


Partition = Annotated[Tuple[int, ...], AfterValidator(_check_partition)]


class Rectangle(NamedTuple):
    """A `rows x cols` box; Gr(k, n) uses rows=k, cols=n-k."""
    rows: int
    cols: int

    @property
    def area(self) -> int:
        return self.rows * self.cols


def make_partition(parts: Iterable[int]) -> Tuple[int, ...]:
    """Normalize an iterable to a partition, dropping trailing zeros."""
    return _check_partition(tuple(p for p in parts if p != 0))


def size(lam: Tuple[int, ...]) -> int:
    return sum(lam)


def length(lam: Tuple[int, ...]) -> int:
    return len(lam)


def contains(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> bool:
    """True when the diagram of `inner` sits inside the diagram of `outer`."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def fits_in(lam: Tuple[int, ...], rect: Rectangle) -> bool:
    return len(lam) <= rect.rows and (not lam or lam[0] <= rect.cols)


def dual_in_rectangle(lam: Tuple[int, ...], rect: Rectangle) -> Tuple[int, ...]:
    """Complement of `lam` in `rect`, rotated by 180 degrees."""
    if not fits_in(lam, rect):
        raise ContainmentError(f"{label(lam)} is not contained in the {rect.rows}x{rect.cols} rectangle")
    padded = list(lam) + [0] * (rect.rows - len(lam))
    return make_partition(rect.cols - p for p in reversed(padded))


@lru_cache(maxsize=None)
def partitions_in_rectangle(rows: int, cols: int) -> Tuple[Tuple[int, ...], ...]:
    """
    All partitions inside a rows x cols box in canonical basis order:
    ascending size, descending lexicographic within a size.
    """
    found: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], cap: int) -> None:
        found.append(prefix)
        if len(prefix) == rows:
            return
        for part in range(min(cap, cols), 0, -1):
            extend(prefix + (part,), part)

    extend((), cols)
    return tuple(sorted(found, key=lambda lam: (sum(lam), tuple(-p for p in lam))))


def partitions_of(total: int, max_parts: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    """Partitions of `total` with at most `max_parts` parts, each at most `max_part`."""
    return tuple(lam for lam in partitions_in_rectangle(max_parts, max_part) if sum(lam) == total)


def label(lam: Tuple[int, ...]) -> str:
    """Human label such as `(3,1)`; the empty partition prints as `∅`."""
    if not lam:
        return "∅"
    return "(" + ",".join(str(p) for p in lam) + ")"
