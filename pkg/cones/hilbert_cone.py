"""
The cone Q_{n,a} of Hilbert functions with a-invariant at most a.

T maps Q_{n,a} onto P_{n,a}, so membership is P-membership of T[g] and the
extreme rays are the T-preimages of the extreme rays of P_{n,a}. The
preimages of the pure powers t^k are the Hilbert series of S/m^(k+1).
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from cones.base import Check, Violation
from cones.labels import Cyclic, LambdaFamily, MuFamily, PurePower, RayLabel, RayLabelError
from cones.positive import create_p_check, p_ray, p_ray_labels
from modules_oracle.hilbert import hs_cyclic_power
from modules_oracle.modules import CyclicPowerModule
from ratcalc.partitions import Partition
from ratcalc.rational import RatLike, format_rat, to_rat
from series.genfun import GenFun
from series.ops import apply_T, coeff_at, eigen_coordinates, from_eigen_coordinates, invert_T

logger = logging.getLogger(__name__)

HORIZON = int(os.environ.get('HILBERT_CONES_HORIZON', '200'))


class CrossSectionError(RuntimeError):
    """A computed cross-section vertex fails one of the half-spaces."""


def create_q_check(n: int, a: int) -> Check:
    p_check = create_p_check(n, a)

    def q_check(g: GenFun) -> Optional[Violation]:
        g.require_space(n, a)
        return p_check(apply_T(g, n))

    q_check.__name__ = f'Q_{{{n},{a}}}'
    return q_check


def q_halfspace_values(g: GenFun, n: int, upto: int) -> List[Fraction]:
    """(n+j+1) h(j) - (j+1) h(j+1) for 0 <= j <= upto."""
    image = apply_T(g, n)
    return [coeff_at(image, j) for j in range(upto + 1)]


def q_extreme_ray(label: RayLabel, n: int, a: int) -> GenFun:
    """
    Cyclic(n+1, i) with 1 <= i <= a+1 gives the series of S/m^i; pure powers
    and partition families give invert_T of the matching ray of P_{n,a}.

    Raises:
        RayLabelError: label out of range for Q_{n,a}
    """
    if isinstance(label, Cyclic):
        if label.ell != n + 1 or not 1 <= label.power <= a + 1:
            raise RayLabelError(
                f"label out of range: {label} is not an artinian ray of Q_{{{n},{a}}}"
            )
        return hs_cyclic_power(CyclicPowerModule(label.ell, label.power), n)
    return invert_T(p_ray(label, n, a), n, a)


def enumerate_q_rays(n: int, a: int, max_part: int) -> List[Tuple[RayLabel, GenFun]]:
    """Artinian rays S/m^i (1 <= i <= a+1), then preimages of the series families."""
    out: List[Tuple[RayLabel, GenFun]] = []
    for label in p_ray_labels(n, a, max_part):
        if isinstance(label, PurePower):
            label = Cyclic(n + 1, label.k + 1)
        out.append((label, q_extreme_ray(label, n, a)))
    return out


def q_series_from_coordinates(coords: Sequence[RatLike], n: int) -> GenFun:
    """
    sum_k c_k / (1-t)^k for coordinates listed from the top: coords[0] is
    the coefficient of (1-t)^-n, coords[1] of (1-t)^-(n-1), and so on.
    """
    return from_eigen_coordinates([to_rat(c) for c in coords], n)


def thm_one_coefficients(h: Sequence[RatLike], n: int, cutoff: int) -> List[Fraction]:
    """
    d_i = h(i-1)/binom(n+i-1, n) - h(i)/binom(n+i, n) for 1 <= i <= cutoff:
    the coordinates of h against the Hilbert functions of S/m^i.
    """
    values = [to_rat(v) for v in h]
    if len(values) < cutoff + 1:
        raise ValueError(f"need h(0..{cutoff}), got {len(values)} values")
    return [
        values[i - 1] / comb(n + i - 1, n) - values[i] / comb(n + i, n)
        for i in range(1, cutoff + 1)
    ]


# --- the Q_{3,-1} cross-section h(0) = 1 ---

@dataclass(frozen=True)
class CrossSectionPoint:
    """A vertex (c2, c1) of the slice h(0) = 1, writing h = c1/(1-t) + c2/(1-t)^2 + c3/(1-t)^3."""
    label: str
    c2: Fraction
    c1: Fraction

    @property
    def c3(self) -> Fraction:
        return 1 - self.c1 - self.c2

    def series(self) -> GenFun:
        return q_series_from_coordinates([self.c3, self.c2, self.c1], 3)

    def to_dict(self) -> Dict:
        return {'i': self.label, 'c2': format_rat(self.c2), 'c1': format_rat(self.c1)}


def _normalized_point(label: str, g: GenFun) -> CrossSectionPoint:
    g = g.scale(1 / coeff_at(g, 0))
    _, c2, c1 = eigen_coordinates(g, 3, -1)
    return CrossSectionPoint(label, c2, c1)


def verify_cross_section_point(point: CrossSectionPoint, horizon: int = HORIZON) -> None:
    """
    Check the half-spaces H_j for j <= horizon and the limiting one c3 >= 0.

    Raises:
        CrossSectionError: on the first failing half-space
    """
    if point.c3 < 0:
        raise CrossSectionError(f"vertex {point.label} violates the limiting half-space")
    for j, value in enumerate(q_halfspace_values(point.series(), 3, horizon)):
        if value < 0:
            raise CrossSectionError(f"vertex {point.label} violates H_{j}")


def q31_cross_section(i_max: int, horizon: int = HORIZON) -> List[CrossSectionPoint]:
    """
    Vertices of the slice h(0) = 1 of Q_{3,-1}: the ray lambda = (i) for
    0 <= i <= i_max, the corner where H_0 meets the limiting half-space
    (ray mu = ()), and the limit point (ray lambda = ()).
    """
    if i_max < 0:
        raise ValueError(f"i_max must be non-negative, got {i_max}")
    labelled = [(str(i), LambdaFamily(Partition((i,)))) for i in range(i_max + 1)]
    labelled += [('corner', MuFamily(Partition())), ('limit', LambdaFamily(Partition()))]
    points = []
    for name, label in labelled:
        point = _normalized_point(name, q_extreme_ray(label, 3, -1))
        verify_cross_section_point(point, horizon)
        points.append(point)
    logger.debug("cross-section: %d vertices verified up to H_%d", len(points), horizon)
    return points


def cross_section_frame(points: Sequence[CrossSectionPoint]) -> pd.DataFrame:
    return pd.DataFrame([p.to_dict() for p in points], columns=['i', 'c2', 'c1'])
