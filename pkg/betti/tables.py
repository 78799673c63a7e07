"""
Sparse Betti tables beta_{i, i+j} with exact rational entries.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

import pandas as pd

from ratcalc.polynomial import poly, t
from ratcalc.rational import RatLike, format_rat, to_rat
from series.genfun import GenFun


@dataclass(frozen=True)
class BettiTable:
    """entries maps (i, j) to beta_{i, i+j}; zero entries are dropped."""
    entries: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in self.entries.items():
            value = to_rat(value)
            if i < 0 or j < 0:
                raise ValueError(f"Betti position ({i}, {j}) must be non-negative")
            if value < 0:
                raise ValueError(f"Betti entry at ({i}, {j}) is negative: {value}")
            if value != 0:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), Fraction(0)) + value
        object.__setattr__(self, 'entries', dict(sorted(clean.items())))

    @classmethod
    def from_degrees(cls, by_degree: Mapping[Tuple[int, int], RatLike]) -> 'BettiTable':
        """Build from (i, total degree) keys."""
        return cls({(i, d - i): v for (i, d), v in by_degree.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(tuple(self.entries.items()))

    def get(self, i: int, j: int) -> Fraction:
        """beta_{i, i+j}."""
        return self.entries.get((i, j), Fraction(0))

    def by_degree(self) -> Iterator[Tuple[int, int, Fraction]]:
        """(i, total degree, value) triples."""
        for (i, j), value in self.entries.items():
            yield i, i + j, value

    def __add__(self, other: 'BettiTable') -> 'BettiTable':
        merged = dict(self.entries)
        for key, value in other.entries.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return BettiTable(merged)

    def scale(self, c: RatLike) -> 'BettiTable':
        c = to_rat(c)
        return BettiTable({key: value * c for key, value in self.entries.items()})

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def regularity(self) -> int:
        """Largest row index with a nonzero entry; -1 for the zero table."""
        return max((j for _, j in self.entries), default=-1)

    def columns(self) -> int:
        return max((i for i, _ in self.entries), default=-1) + 1

    def to_dict(self) -> Dict:
        rows: Dict[str, Dict[str, str]] = {}
        for (i, j), value in self.entries.items():
            rows.setdefault(str(j), {})[str(i)] = format_rat(value)
        return {'rows': rows}

    @classmethod
    def from_dict(cls, payload: Dict) -> 'BettiTable':
        return cls({
            (int(i), int(j)): to_rat(value)
            for j, row in payload['rows'].items()
            for i, value in row.items()
        })

    def to_frame(self, ncols: Optional[int] = None) -> pd.DataFrame:
        """Rows j, columns i, entries as "p/q" strings ('.' for zero)."""
        rows = range(self.regularity() + 1)
        cols = range(max(self.columns(), ncols or 0))
        data = [[format_rat(self.get(i, j)) if self.get(i, j) else '.' for i in cols] for j in rows]
        return pd.DataFrame(data, index=pd.Index(rows, name='j'), columns=list(cols))

    def render_text(self, ncols: Optional[int] = None) -> str:
        """Dot-matrix layout: one line per row j, '.' for zero entries."""
        if self.is_zero:
            return '0'
        frame = self.to_frame(ncols)
        cells = [[str(j) + ':'] + list(frame.loc[j]) for j in frame.index]
        header = [''] + [str(i) for i in frame.columns]
        widths = [max(len(row[c]) for row in [header] + cells) for c in range(len(header))]
        lines = [' '.join(cell.rjust(w) for cell, w in zip(row, widths)) for row in [header] + cells]
        return '\n'.join(line.rstrip() for line in lines)


def hs_from_betti(b: BettiTable, n: int) -> GenFun:
    """sum_{i,d} (-1)^i beta_{i,d} t^d over (1-t)^(n+1)."""
    top = max((d for _, d, _ in b.by_degree()), default=0)
    numer = [Fraction(0)] * (top + 1)
    for i, d, value in b.by_degree():
        numer[d] += value if i % 2 == 0 else -value
    return GenFun(n + 1, poly(numer, t))
