"""
Explicit modules whose Hilbert series map under T onto extreme rays of P_{n,a}.

A series ray F splits at a cutoff c into a polynomial head F1 (degrees < c)
and a tail F2 = t^c * sum_j f2(j) t^j. Each head term b_j t^j is the T-image
of a multiple of S/m^(j+1). The tail polynomial f2 has only distinct negative
integer roots, so it expands non-negatively in binom(s+k, k); the k-th basis
term is the T-image of a multiple of S/<x_0..x_{n-k-1}>^(c+1).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, Optional

from sympy import Poly

from cones.labels import LambdaFamily, MuFamily, PurePower, RayLabel, RayLabelError, check_p_label
from cones.positive import p_ray, ray_polynomial
from modules_oracle.hilbert import hs_cyclic_power, hs_module_sum
from modules_oracle.modules import CyclicPowerModule, ModuleSum
from ratcalc.polynomial import integer_roots
from ratcalc.positivity import LemmaPosError, lemma_pos_decompose
from ratcalc.rational import format_rat, to_rat
from series.genfun import GenFun
from series.ops import apply_T, coeff_at, poly_tail_to_genfun

logger = logging.getLogger(__name__)


class RealizationError(RuntimeError):
    """The construction broke one of its own invariants."""


@dataclass(frozen=True)
class RaySplit:
    f1: GenFun
    f2: GenFun
    cutoff: int
    tail: Poly  # f2(s) = P(s + cutoff)


@dataclass(frozen=True)
class Realization:
    scalar: Fraction
    modules: ModuleSum
    working_a: int

    def __post_init__(self):
        if self.scalar <= 0:
            raise RealizationError(f"scalar must be positive, got {self.scalar}")

    def series(self, n: int) -> GenFun:
        return hs_module_sum(self.modules, n)

    def to_dict(self) -> Dict:
        return {
            'scalar': format_rat(self.scalar),
            'summands': self.modules.to_list(),
            'working_a': self.working_a,
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> 'Realization':
        return cls(
            to_rat(payload['scalar']),
            ModuleSum.from_list(payload['summands']),
            int(payload['working_a']),
        )


def split_ray(F: GenFun, label: RayLabel, n: int, a: int) -> RaySplit:
    """
    cutoff = max(a_hat, 1 + largest integer root of the tail polynomial).

    Raises:
        RayLabelError: label not a series family
    """
    if not isinstance(label, (LambdaFamily, MuFamily)):
        raise RayLabelError(f"label not a series family: {label}")
    P, start = ray_polynomial(label, n, a)
    roots = integer_roots(P)
    cutoff = max(start, roots[-1] + 1) if roots else start
    f1 = GenFun.from_coeffs([coeff_at(F, j) for j in range(cutoff)])
    f2 = F - f1
    tail = P.shift(cutoff)
    if f2 != poly_tail_to_genfun(P, cutoff):
        raise RealizationError(f"series {F} is not the ray {label} of P_{{{n},{a}}}")
    return RaySplit(f1, f2, cutoff, tail)


def _artinian_summand(j: int, weight: Fraction, n: int):
    """b t^j = T[ b / ((j+1) binom(n+j+1, j+1)) * H(S/m^(j+1)) ]."""
    return CyclicPowerModule(n + 1, j + 1), weight / ((j + 1) * comb(n + j + 1, j + 1))


def realize_p_ray(label: RayLabel, n: int, a: int) -> Realization:
    """
    Raises:
        RayLabelError: label out of range for P_{n,a}
        RealizationError: decomposition failed or the T-identity does not hold
    """
    check_p_label(label, n, a)
    pairs = []
    if isinstance(label, PurePower):
        pairs.append(_artinian_summand(label.k, Fraction(1), n))
    else:
        split = split_ray(p_ray(label, n, a), label, n, a)
        for j, b in enumerate(split.f1.numer_coeffs()):
            if b:
                pairs.append(_artinian_summand(j, b, n))
        try:
            tail_coeffs = lemma_pos_decompose(split.tail)
        except LemmaPosError as exc:
            raise RealizationError(f"decomposition failed for {label}: {exc}") from exc
        c = split.cutoff
        for k, ck in enumerate(tail_coeffs):
            if ck:
                mod = CyclicPowerModule(n - k, c + 1)
                pairs.append((mod, ck / ((c + 1) * comb(n - k + c, c + 1))))
        logger.debug("split %s at %d: head %s, tail %s", label, c, split.f1, tail_coeffs)

    modules = ModuleSum.of(pairs)
    working_a = max([a] + [mod.min_a(n) for mod, _ in modules.summands])
    realization = Realization(Fraction(1), modules, working_a)
    verify_realization(realization, label, n, a)
    return realization


def verify_realization(realization: Realization, label: RayLabel, n: int, a: int) -> None:
    """
    Check sum mult * T[H(M)] == scalar * ray exactly, and that the weighted
    sum lies in V_{n,a} even when single summands need the larger working_a.
    """
    total = GenFun.zero()
    for mod, mult in realization.modules.summands:
        summand = hs_cyclic_power(mod, n)
        if not summand.in_space(n, realization.working_a):
            raise RealizationError(f"{mod} is outside V_{{{n},{realization.working_a}}}")
        total = total + summand.scale(mult)
    if apply_T(total, n) != p_ray(label, n, a).scale(realization.scalar):
        raise RealizationError(f"T-image of the realization of {label} does not match the ray")
    if not total.in_space(n, a):
        raise RealizationError(f"realization of {label} is not in V_{{{n},{a}}}")


def clear_denominators(realization: Realization) -> Realization:
    """Integer multiplicities; the scalar absorbs the clearing factor."""
    factor = lcm(*([mult.denominator for mult in realization.modules.multiplicities()] or [1]))
    return Realization(
        realization.scalar * factor,
        realization.modules.scale(factor),
        realization.working_a,
    )


def minimal_integral_multiple(g: GenFun) -> Optional[Fraction]:
    """
    The least c > 0 making every coefficient of c*g an integer; None for g = 0.

    Integer values on h(0 .. deg N + den_exp) decide integrality of the
    whole sequence: they cover den_exp consecutive values of the polynomial
    tail, which has degree below den_exp.
    """
    if g.is_zero:
        return None
    top = max(int(g.numer.degree()), 0) + g.den_exp
    values = [coeff_at(g, j) for j in range(top + 1)]
    common_den = lcm(*[v.denominator for v in values])
    numerators = [int(v * common_den) for v in values]
    content = 0
    for value in numerators:
        content = gcd(content, value)
    return Fraction(common_den, content)
