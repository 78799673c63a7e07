"""
The cone P_{n,a} of non-negative sequences in V_{n,a}.

Extreme rays are t^k for 0 <= k <= a together with two partition families
whose coefficients are a polynomial in j from index a_hat on. That
polynomial has only non-negative integer roots in consecutive pairs, plus
the negative roots that push the series down into V_{n,a}.
"""

from typing import List, Optional, Tuple

from sympy import Poly

from cones.base import Check, Violation
from cones.labels import (
    LambdaFamily,
    MuFamily,
    PurePower,
    RayLabel,
    RayLabelError,
    a_hat,
    check_p_label,
    lambda_max_parts,
    mu_max_parts,
)
from ratcalc.partitions import p_lambda, partitions_bounded
from ratcalc.polynomial import constant, integer_nonneg_on_ray, leading_coefficient, linear, s
from series.genfun import GenFun
from series.ops import coeff_at, hilbert_polynomial, poly_tail_to_genfun


def ray_polynomial(label: RayLabel, n: int, a: int) -> Tuple[Poly, int]:
    """
    The tail polynomial P(j) of a series ray and the index a_hat it starts at.

    lambda: P(j) = p_lambda(j - a_hat) * prod_{l=1}^{a_hat-a-1} (j - a_hat + l)
    mu:     P(j) = (j - a_hat) * p_mu(j - a_hat - 1) * prod_{l=1}^{a_hat-a-1} (j - a_hat + l)
    """
    check_p_label(label, n, a)
    if not isinstance(label, (LambdaFamily, MuFamily)):
        raise RayLabelError(f"label not a series family: {label}")
    start = a_hat(a)
    padding = constant(1, s)
    for ell in range(1, start - a):
        padding = padding * linear(ell - start, s)
    if isinstance(label, LambdaFamily):
        core = p_lambda(label.partition).shift(-start)
    else:
        core = linear(-start, s) * p_lambda(label.partition).shift(-start - 1)
    return core * padding, start


def p_ray(label: RayLabel, n: int, a: int) -> GenFun:
    """
    Raises:
        RayLabelError: label out of range, or a Cyclic label
    """
    check_p_label(label, n, a)
    if isinstance(label, PurePower):
        return GenFun.t_power(label.k)
    P, start = ray_polynomial(label, n, a)
    return poly_tail_to_genfun(P, start)


def p_ray_labels(n: int, a: int, max_part: int) -> List[RayLabel]:
    """Pure powers first, then lambda partitions, then mu partitions."""
    labels: List[RayLabel] = [PurePower(k) for k in range(0, a + 1)]
    labels += [LambdaFamily(lam) for lam in partitions_bounded(lambda_max_parts(n, a), max_part)]
    labels += [MuFamily(mu) for mu in partitions_bounded(mu_max_parts(n, a), max_part)]
    return labels


def enumerate_p_rays(n: int, a: int, max_part: int) -> List[Tuple[RayLabel, GenFun]]:
    """Every extreme ray of P_{n,a} whose partition entries are at most max_part."""
    if a < -n:
        raise RayLabelError(f"P_{{{n},{a}}} needs a >= -n")
    return [(label, p_ray(label, n, a)) for label in p_ray_labels(n, a, max_part)]


def create_p_check(n: int, a: int) -> Check:
    """
    Non-negativity of h on 0..max(a, 0), then of the Hilbert polynomial on
    every integer past max(a, 0). A negative leading coefficient is reported
    as the limiting 'infinity' violation.
    """
    head = max(a, 0)

    def p_check(g: GenFun) -> Optional[Violation]:
        g.require_space(n, a)
        for j in range(head + 1):
            if coeff_at(g, j) < 0:
                return Violation('coefficient', j)
        q = hilbert_polynomial(g, a)
        if q.is_zero:
            return None
        if leading_coefficient(q) < 0:
            return Violation('infinity')
        decision = integer_nonneg_on_ray(q, head + 1)
        if not decision:
            return Violation('coefficient', decision.witness)
        return None

    p_check.__name__ = f'P_{{{n},{a}}}'
    return p_check
