"""
Pure Betti tables and the Psi map.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from betti.tables import BettiTable


@dataclass(frozen=True)
class DegreeSequence:
    degrees: Tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees:
            raise ValueError("a degree sequence needs at least one degree")
        if any(degrees[i] >= degrees[i + 1] for i in range(len(degrees) - 1)):
            raise ValueError(f"degrees must be strictly increasing: {degrees}")
        object.__setattr__(self, 'degrees', degrees)

    @classmethod
    def of(cls, degrees: Iterable[int]) -> 'DegreeSequence':
        return cls(tuple(degrees))


def pure_table(d: DegreeSequence) -> BettiTable:
    """beta_{i, d_i} = prod_{j != i} 1 / |d_j - d_i|."""
    entries = {}
    for i, di in enumerate(d.degrees):
        value = Fraction(1)
        for j, dj in enumerate(d.degrees):
            if j != i:
                value /= abs(dj - di)
        entries[(i, di)] = value
    return BettiTable.from_degrees(entries)


def psi_map(b: BettiTable) -> BettiTable:
    """Psi(beta)_{i, d} = d * beta_{i+1, d}; column 0 is dropped."""
    return BettiTable.from_degrees({
        (i - 1, d): d * value for i, d, value in b.by_degree() if i >= 1
    })
