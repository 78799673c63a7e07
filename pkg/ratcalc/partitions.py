"""
Partitions with a bounded number of parts and the p_lambda polynomials.
"""

from dataclasses import dataclass
from typing import Generator, Iterable, Tuple

from sympy import Poly

from ratcalc.polynomial import constant, linear, s


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of non-negative integers; the empty tuple is allowed."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be non-negative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'Partition':
        return cls(tuple(parts))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __str__(self) -> str:
        return ','.join(str(p) for p in self.parts)


def _decreasing(max_parts: int, cap: int) -> Generator[Tuple[int, ...], None, None]:
    yield ()
    if max_parts == 0:
        return
    for first in range(cap + 1):
        for rest in _decreasing(max_parts - 1, first):
            yield (first,) + rest


def partitions_bounded(max_parts: int, max_part: int) -> Generator[Partition, None, None]:
    """
    All partitions with at most max_parts parts, each part at most max_part.

    Zero parts are allowed, so (0) and () are distinct partitions. A negative
    max_parts yields nothing.
    """
    if max_parts < 0 or max_part < 0:
        return
    for parts in _decreasing(max_parts, max_part):
        yield Partition(parts)


def p_lambda(lam: Partition) -> Poly:
    """
    Monic polynomial of degree 2r whose roots are consecutive non-negative
    integer pairs: prod_i (s - lam_{r-i+1} - 2i + 2)(s - lam_{r-i+1} - 2i + 1).
    """
    r = lam.length
    out = constant(1, s)
    for i in range(1, r + 1):
        part = lam.parts[r - i]
        out = out * linear(-(part + 2 * i - 2), s) * linear(-(part + 2 * i - 1), s)
    return out
