"""
Coefficient extraction, Hilbert polynomials and the operator T.

T acts on sequences by h(j) -> (n+j+1) h(j) - (j+1) h(j+1). On series it is
(n+1) - (1-t) d/dt, diagonal in the basis (1-t)^i with eigenvalue n+1+i.
"""

import logging
from fractions import Fraction
from math import comb, factorial
from typing import List

from sympy import Poly

from ratcalc.polynomial import (
    binom_poly,
    coefficients,
    leading_coefficient,
    poly,
    s,
    scale,
    t,
)
from series.genfun import AmbientSpaceError, GenFun, ONE_MINUS_T

logger = logging.getLogger(__name__)


def coeff_at(g: GenFun, j: int) -> Fraction:
    """h(j): convolve the numerator with the coefficients of (1-t)^-d."""
    if j < 0:
        raise ValueError(f"coefficient index must be non-negative, got {j}")
    b = g.numer_coeffs()
    d = g.den_exp
    if d == 0:
        return b[j] if j < len(b) else Fraction(0)
    return sum(
        (b[k] * comb(d - 1 + j - k, d - 1) for k in range(min(j, len(b) - 1) + 1)),
        Fraction(0),
    )


def coefficients_upto(g: GenFun, upto: int) -> List[Fraction]:
    """[h(0), ..., h(upto)]."""
    return [coeff_at(g, j) for j in range(upto + 1)]


def hilbert_polynomial(g: GenFun, a: int) -> Poly:
    """
    The polynomial q in s with q(j) = h(j) for every j > a.

    Raises:
        AmbientSpaceError: when the numerator degree exceeds a + den_exp
    """
    if not g.in_space(g.den_exp, a):
        raise AmbientSpaceError(f"not in V_{{n,{a}}}: {g}")
    d = g.den_exp
    if d == 0:
        return poly([], s)
    out = poly([], s)
    for k, b in enumerate(g.numer_coeffs()):
        if b:
            out = out + scale(binom_poly(d - 1, d - 1 - k), b)
    return out


def poly_tail_to_genfun(P: Poly, start: int) -> GenFun:
    """
    Series of h(j) = P(j) for j >= start and h(j) = 0 below start.

    P(i + start) is expanded in the basis binom(i+k, k) by eliminating from the
    top degree down; binom(i+k, k) sums to t^start / (1-t)^(k+1).
    """
    remainder = P.shift(start)
    if remainder.is_zero:
        return GenFun.zero()
    out = GenFun.zero()
    for k in range(int(remainder.degree()), -1, -1):
        if remainder.is_zero or remainder.degree() < k:
            continue
        c_k = leading_coefficient(remainder) * factorial(k)
        remainder = remainder - scale(binom_poly(k, k), c_k)
        out = out + GenFun(k + 1, poly([c_k], t)).shift(start)
    return out


def apply_T(g: GenFun, n: int) -> GenFun:
    """T[N/(1-t)^d] = ((n+1-d) N - (1-t) N') / (1-t)^d."""
    N = g.numer
    d = g.den_exp
    image = N.mul_ground(n + 1 - d) - ONE_MINUS_T * N.diff(t)
    return GenFun(d, image)


def eigen_coordinates(g: GenFun, n: int, a: int) -> List[Fraction]:
    """
    Coordinates e_0..e_{n+a} with g = sum_k e_k (1-t)^(k-n).

    Raises:
        AmbientSpaceError: when g is not in V_{n,a} or a < -n
    """
    if a < -n:
        raise AmbientSpaceError(f"V_{{{n},{a}}} needs a >= -n")
    g.require_space(n, a)
    N = g.numerator_over(n)
    swapped = coefficients(N.compose(ONE_MINUS_T))
    return swapped + [Fraction(0)] * (n + a + 1 - len(swapped))


def from_eigen_coordinates(coords: List[Fraction], n: int) -> GenFun:
    N = poly(coords, t).compose(ONE_MINUS_T)
    return GenFun(n, N)


def invert_T(g: GenFun, n: int, a: int) -> GenFun:
    """
    The unique h in V_{n,a} with apply_T(h, n) == g.

    Coordinate k of the eigenbasis (1-t)^(k-n) has eigenvalue k+1 >= 1.
    """
    coords = eigen_coordinates(g, n, a)
    return from_eigen_coordinates([e / (k + 1) for k, e in enumerate(coords)], n)
