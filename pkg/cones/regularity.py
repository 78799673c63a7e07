"""
The simplicial cone R_{n,m} of Hilbert functions with regularity at most m.

R_{n,m} sits in V_{n,m}, has the n+m+1 rays

    S/m^i                    for 1 <= i <= m+1
    S/<x_0..x_{l-1}>^(m+1)   for l = n, n-1, ..., 1

and is cut out by n+m+1 facets read off the triangular coordinates. In
scaled coordinates rho_p = c_p / w_p every ray is a 0/1 staircase, so the
decomposition is alpha_p = rho_p - rho_{p+1}.
"""

import logging
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from cones.base import Check, Violation, composite_and
from cones.labels import Cyclic, RayLabel
from modules_oracle.hilbert import hs_cyclic_power
from modules_oracle.modules import CyclicPowerModule
from ratcalc.rational import RatLike, to_rat
from series.coordinates import RCoordinates, r_coordinates
from series.genfun import GenFun

logger = logging.getLogger(__name__)


class SubspaceError(ValueError):
    """The n-th backward difference of the Hilbert polynomial does not vanish at m."""


def r_ray_labels(n: int, m: int) -> List[Cyclic]:
    if m < 0:
        raise ValueError(f"R_{{n,m}} needs m >= 0, got {m}")
    heads = [Cyclic(n + 1, i) for i in range(1, m + 2)]
    tails = [Cyclic(ell, m + 1) for ell in range(n, 0, -1)]
    return heads + tails


def r_extreme_rays(n: int, m: int) -> List[Tuple[RayLabel, GenFun]]:
    return [
        (label, hs_cyclic_power(CyclicPowerModule(label.ell, label.power), n))
        for label in r_ray_labels(n, m)
    ]


def dimension_restricted_rays(n: int, m: int, d: int) -> List[Tuple[RayLabel, GenFun]]:
    """Rays of the subcone of modules of dimension at most d."""
    if not 0 <= d <= n:
        raise ValueError(f"dimension bound must satisfy 0 <= d <= n, got d = {d}")
    return [(label, g) for label, g in r_extreme_rays(n, m) if n + 1 - label.ell <= d]


def _weights(n: int, m: int) -> List[int]:
    """Ray staircase heights: binom(n+k, n) on the head, binom(n+1-k+m, m) on the tail."""
    head = [comb(n + k, n) for k in range(m + 1)]
    tail = [comb(n + 1 - k + m, m) for k in range(1, n + 1)]
    return head + tail


def _scaled(coords: RCoordinates, n: int, m: int) -> List[Fraction]:
    values = list(coords.head) + list(coords.tail[:n])
    return [c / w for c, w in zip(values, _weights(n, m))]


def r_facet_values(g: GenFun, n: int, m: int) -> List[Fraction]:
    """
    Facet slacks in order: (n+j+1)h(j) - (j+1)h(j+1) for 0 <= j < m, then
    h(m) - q(m), then (n-i) D^i q(m) - (n+m-i) D^(i+1) q(m) for 0 <= i < n,
    where D is the backward difference.
    """
    c = r_coordinates(g, n, m)
    h = c.head
    tail = c.tail
    values = [(n + j + 1) * h[j] - (j + 1) * h[j + 1] for j in range(m)]
    values.append(h[m] - tail[0])
    values += [(n - i) * tail[i] - (n + m - i) * tail[i + 1] for i in range(n)]
    return values


def create_equality_check(n: int, m: int, first: int) -> Check:
    """D^i q(m) = 0 for first <= i <= n."""
    def equality_check(g: GenFun) -> Optional[Violation]:
        tail = r_coordinates(g, n, m).tail
        for i in range(first, n + 1):
            if tail[i] != 0:
                return Violation('equality', i)
        return None

    equality_check.__name__ = f'dim<={first}'
    return equality_check


def create_r_check(n: int, m: int) -> Check:
    def facet_check(g: GenFun) -> Optional[Violation]:
        for i, value in enumerate(r_facet_values(g, n, m)):
            if value < 0:
                return Violation('facet', i)
        return None

    facet_check.__name__ = f'R_{{{n},{m}}}'
    return composite_and(facet_check, create_equality_check(n, m, n))


def create_r_dim_check(n: int, m: int, d: int) -> Check:
    if not 0 <= d <= n:
        raise ValueError(f"dimension bound must satisfy 0 <= d <= n, got d = {d}")
    return composite_and(create_r_check(n, m), create_equality_check(n, m, d))


def r_decompose(g: GenFun, n: int, m: int) -> List[Fraction]:
    """
    alpha_0..alpha_m, alpha_{-1}..alpha_{-n} with g = sum alpha_k * ray_k.

    Raises:
        AmbientSpaceError: g not in V_{n+1,m}
        SubspaceError: outside subspace V_{n,m}
    """
    coords = r_coordinates(g, n, m)
    if coords.tail[n] != 0:
        raise SubspaceError(f"outside subspace V_{{{n},{m}}}: D^{n} q(m) = {coords.tail[n]}")
    rho = _scaled(coords, n, m) + [Fraction(0)]
    alphas = [rho[p] - rho[p + 1] for p in range(n + m + 1)]
    logger.debug("R_{%d,%d} decomposition: %s", n, m, alphas)
    return alphas


def r_compose(alphas: Sequence[RatLike], n: int, m: int) -> GenFun:
    """sum alpha_k * ray_k in the fixed ray order."""
    rays = r_extreme_rays(n, m)
    if len(alphas) != len(rays):
        raise ValueError(f"R_{{{n},{m}}} has {len(rays)} rays, got {len(alphas)} coefficients")
    out = GenFun.zero()
    for alpha, (_, g) in zip(alphas, rays):
        alpha = to_rat(alpha)
        if alpha:
            out = out + g.scale(alpha)
    return out


def _check_pd(n: int, ell: int) -> None:
    if not 1 <= ell <= n + 1:
        raise ValueError(f"projective dimension bound must satisfy 1 <= ell <= n+1, got ell = {ell}")


def pd_restricted_rays(n: int, m: int, ell: int) -> List[Tuple[RayLabel, GenFun]]:
    """Rays of the subcone of modules of projective dimension at most ell, as series over n."""
    _check_pd(n, ell)
    return [
        (label, hs_cyclic_power(CyclicPowerModule(label.ell, label.power), n))
        for label in r_ray_labels(ell - 1, m)
    ]


def create_r_pd_check(n: int, m: int, ell: int) -> Check:
    """
    Multiplying by (1-t)^(n+1-ell) sends S/<x_0..x_{k-1}>^i over n+1
    variables to the same module over ell variables, and maps the subcone
    of projective dimension at most ell onto R_{ell-1,m}.
    """
    _check_pd(n, ell)
    inner = create_r_check(ell - 1, m)

    def pd_check(g: GenFun) -> Optional[Violation]:
        image = g.times_one_minus_t(n + 1 - ell)
        if not image.in_space(ell, m):
            return Violation('degree', image.a_invariant())
        return inner(image)

    pd_check.__name__ = f'pd<={ell}'
    return pd_check
