"""
Triangular coordinates on V_{n+1,m}.

The basis 1, t, ..., t^m, t^(m+1)/(1-t), ..., t^(m+1)/(1-t)^(n+1) is
triangular: the head coordinates are h(0..m) and the tail coordinate
c_{-i-1} is the i-th backward difference of the Hilbert polynomial at m.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ratcalc.polynomial import backward_difference, evaluate, poly, t
from ratcalc.rational import format_rat, to_rat
from series.genfun import AmbientSpaceError, GenFun
from series.ops import coeff_at, hilbert_polynomial


@dataclass(frozen=True)
class RCoordinates:
    """head = (c_0..c_m); tail = (c_{-1}..c_{-n-1})."""
    head: Tuple[Fraction, ...]
    tail: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'head', tuple(to_rat(c) for c in self.head))
        object.__setattr__(self, 'tail', tuple(to_rat(c) for c in self.tail))
        if not self.head:
            raise ValueError("head coordinates need at least c_0")

    @property
    def m(self) -> int:
        return len(self.head) - 1

    @property
    def n(self) -> int:
        return len(self.tail) - 1

    def tail_at(self, k: int) -> Fraction:
        """c_{-k} for 1 <= k <= n+1."""
        return self.tail[k - 1]

    def to_dict(self) -> Dict:
        return {
            'head': [format_rat(c) for c in self.head],
            'tail': [format_rat(c) for c in self.tail],
        }


def r_coordinates(g: GenFun, n: int, m: int) -> RCoordinates:
    """
    Raises:
        AmbientSpaceError: when g is not in V_{n+1,m}
    """
    if not g.in_space(n + 1, m):
        raise AmbientSpaceError(f"not in V_{{{n + 1},{m}}}: {g}")
    head = [coeff_at(g, j) for j in range(m + 1)]
    q = hilbert_polynomial(g, m)
    tail = [evaluate(backward_difference(q, i), m) for i in range(n + 1)]
    return RCoordinates(tuple(head), tuple(tail))


def rcoords_to_genfun(coords: RCoordinates) -> GenFun:
    """sum_j c_j t^j + sum_k c_{-k} t^(m+1) / (1-t)^k."""
    m = coords.m
    out = GenFun.from_coeffs(list(coords.head))
    for k, c in enumerate(coords.tail, start=1):
        if c:
            out = out + GenFun(k, poly([c], t)).shift(m + 1)
    return out
