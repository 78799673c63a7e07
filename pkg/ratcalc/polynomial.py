"""
Univariate polynomials over QQ.

Poly is sympy.Poly with domain QQ and a single generator: `s` for
sequence-index polynomials (Hilbert polynomials, ray tails) and `t` for the
numerators of generating functions. The zero polynomial has degree -oo.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import sympy
from sympy import Poly, QQ

from ratcalc.rational import RatLike, to_rat, to_sympy

s, t = sympy.symbols('s t')


def poly(coeffs: Sequence[RatLike], gen: sympy.Symbol = s) -> Poly:
    """Build a Poly from coefficients listed lowest power first."""
    rep = [to_sympy(c) for c in reversed(list(coeffs))]
    return Poly.from_list(rep or [0], gen, domain=QQ)


def constant(value: RatLike, gen: sympy.Symbol = s) -> Poly:
    return poly([value], gen)


def monomial(k: int, coeff: RatLike = 1, gen: sympy.Symbol = s) -> Poly:
    return poly([0] * k + [coeff], gen)


def linear(root_shift: RatLike, gen: sympy.Symbol = s) -> Poly:
    """The polynomial gen + root_shift."""
    return poly([root_shift, 1], gen)


def coefficients(p: Poly) -> List[Fraction]:
    """Coefficients lowest power first; [] for the zero polynomial."""
    if p.is_zero:
        return []
    return [to_rat(c) for c in reversed(p.all_coeffs())]


def degree(p: Poly):
    """Degree as an int, or sympy's -oo for the zero polynomial."""
    return p.degree()


def leading_coefficient(p: Poly) -> Fraction:
    return to_rat(p.LC())


def evaluate(p: Poly, x: RatLike) -> Fraction:
    if p.is_zero:
        return Fraction(0)
    return to_rat(p.eval(to_sympy(x)))


def scale(p: Poly, c: RatLike) -> Poly:
    return p.mul_ground(to_sympy(c))


def binom_poly(k: int, shift: int, gen: sympy.Symbol = s) -> Poly:
    """
    binom(gen + shift, k) as a polynomial of degree k.

    Args:
        k: lower index, k >= 0
        shift: integer offset added to the generator
    """
    if k < 0:
        raise ValueError(f"binomial degree must be non-negative, got {k}")
    out = constant(1, gen)
    for r in range(k):
        out = out * linear(shift - r, gen)
    return out.mul_ground(sympy.Rational(1, math.factorial(k)))


def backward_difference(q: Poly, order: int = 1) -> Poly:
    """Apply q(s) -> q(s) - q(s-1) `order` times."""
    if order < 0:
        raise ValueError(f"difference order must be non-negative, got {order}")
    out = q
    for _ in range(order):
        if out.is_zero:
            break
        out = out - out.shift(-1)
    return out


def cauchy_bound(p: Poly) -> Fraction:
    """1 + max |c_k / lead|; every real root has absolute value below it."""
    cs = coefficients(p)
    if len(cs) <= 1:
        return Fraction(1)
    lead = cs[-1]
    return 1 + max(abs(c / lead) for c in cs[:-1])


def integer_roots(p: Poly) -> List[int]:
    """Distinct integer roots in increasing order."""
    if p.is_zero or p.degree() == 0:
        return []
    found = [to_rat(r) for r in p.ground_roots()]
    return sorted(int(r) for r in found if r.denominator == 1)


@dataclass(frozen=True)
class NonnegDecision:
    """Outcome of integer_nonneg_on_ray; witness is the smallest violating integer."""
    nonneg: bool
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.nonneg


def _sign_change_candidates(p: Poly, start: int) -> List[int]:
    # The first integer past each real root, bracketed by isolating
    # intervals of width at most 1/2.
    out = {start}
    for (lo, hi), _ in p.intervals(eps=sympy.Rational(1, 2)):
        lo, hi = to_rat(lo), to_rat(hi)
        out.update(range(max(start, math.floor(lo)), max(start, math.ceil(hi) + 1) + 1))
    return sorted(out)


def integer_nonneg_on_ray(p: Poly, start: int) -> NonnegDecision:
    """
    Decide whether p(j) >= 0 for every integer j >= start.

    The sign of p is constant between consecutive real roots, so the smallest
    violating integer is either `start` or the first integer past some root.
    Roots are isolated exactly by sympy; only a few integers per root are
    evaluated, whatever the size of the coefficients.
    """
    if p.is_zero:
        return NonnegDecision(True)
    for j in _sign_change_candidates(p, start):
        if evaluate(p, j) < 0:
            return NonnegDecision(False, j)
    return NonnegDecision(True)
