"""
Sharp upper bounds on the Betti table of a module with Hilbert function h
and regularity at most m.

Rows 0 <= j < m:  beta_{i,i+j} <= binom(n, i-1) / (i+j) * T[h](j)
Row m:            beta_{i,i+m} <= (n+m+1)/(i+m) * binom(n, i-1) * h(m)
                                  + sum_{k=1}^{i} (-1)^k binom(n+1, i-k) h(m+k)

with T[h](j) = (n+j+1) h(j) - (j+1) h(j+1). The bound is attained by the
direct sum of cone generators with the coefficients of r_decompose.
"""

from fractions import Fraction
from math import comb

from betti.tables import BettiTable
from cones.base import ConeId, ConeKind
from cones.membership import membership
from series.genfun import GenFun
from series.ops import coeff_at


class BettiBoundsError(ValueError):
    """The series is not a member of R_{n,m}."""


def betti_bounds(g: GenFun, n: int, m: int) -> BettiTable:
    cert = membership(ConeId(ConeKind.R, n, m), g)
    if not cert.member:
        raise BettiBoundsError(
            f"not in R_{{{n},{m}}}: {cert.violation.kind} {cert.violation.index}"
        )
    h = [coeff_at(g, j) for j in range(m + n + 2)]
    entries = {(0, 0): h[0]}
    for j in range(m):
        t_value = (n + j + 1) * h[j] - (j + 1) * h[j + 1]
        for i in range(1, n + 2):
            entries[(i, j)] = Fraction(comb(n, i - 1), i + j) * t_value
    for i in range(1, n + 2):
        value = Fraction(n + m + 1, i + m) * comb(n, i - 1) * h[m]
        value += sum((-1) ** k * comb(n + 1, i - k) * h[m + k] for k in range(1, i + 1))
        entries[(i, m)] = value
    return BettiTable(entries)
