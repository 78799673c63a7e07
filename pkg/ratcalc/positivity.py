"""
Non-negative expansion of real-rooted polynomials in the binomial basis.

A polynomial of degree r with r distinct negative integer roots and positive
leading coefficient is a non-negative combination of binom(s+k, k), k <= r.
"""

import logging
from fractions import Fraction
from typing import List

from sympy import Poly

from ratcalc.polynomial import integer_roots, leading_coefficient

logger = logging.getLogger(__name__)


class LemmaPosError(ValueError):
    """Input does not have distinct negative integer roots and a positive lead."""

    def __init__(self, detail: str):
        super().__init__(f"lemma-pos precondition violated: {detail}")


def lemma_pos_decompose(f: Poly) -> List[Fraction]:
    """
    Return c_0..c_r >= 0 with sum_k c_k * binom(s+k, k) == f.

    The expansion is built one root at a time. If g has degree d and
    coefficients c, then (s + d + 1 + l) * g has coefficients
    k*c[k-1] + (d - k + l)*c[k]; l >= 0 holds because the k-th smallest root
    magnitude of distinct negative integers is at least k.

    Raises:
        LemmaPosError: when the roots or the leading coefficient disqualify f
    """
    if f.is_zero:
        raise LemmaPosError("zero polynomial")
    lead = leading_coefficient(f)
    if lead <= 0:
        raise LemmaPosError(f"leading coefficient {lead} is not positive")

    r = f.degree()
    # nearest to zero first
    roots = [rho for rho in reversed(integer_roots(f)) if rho < 0]
    if len(roots) != r:
        raise LemmaPosError(
            f"degree {r} but {len(roots)} distinct negative integer roots"
        )

    coeffs = [lead]
    for rho in roots:
        d = len(coeffs) - 1
        ell = -rho - (d + 1)
        grown = []
        for k in range(d + 2):
            below = k * coeffs[k - 1] if k >= 1 else Fraction(0)
            same = (d - k + ell) * coeffs[k] if k <= d else Fraction(0)
            grown.append(below + same)
        coeffs = grown

    logger.debug("lemma-pos expansion of degree %d: %s", r, coeffs)
    return coeffs
