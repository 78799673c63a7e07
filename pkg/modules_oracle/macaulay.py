"""
Macaulay's linear inequality (n+j+1) h(j) >= (j+1) h(j+1) on finite data.
"""

from typing import Sequence

from cones.base import Certificate
from ratcalc.rational import RatLike, to_rat


def macaulay_check(h: Sequence[RatLike], n: int) -> Certificate:
    """Check 0 <= j < len(h)-1; the rejection names the first failing j as a facet index."""
    values = [to_rat(v) for v in h]
    for j in range(len(values) - 1):
        if (n + j + 1) * values[j] < (j + 1) * values[j + 1]:
            return Certificate.reject('facet', j)
    return Certificate.accept()
