"""
Seeded random monomial ideals for property campaigns.
"""

from math import comb
from typing import Union

import numpy as np

from modules_oracle.modules import MonomialIdeal

# Reported in campaign metadata so runs can be reproduced.
RNG_ALGORITHM = 'numpy.PCG64'

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_exponent_vector(rng: np.random.Generator, nvars: int, maxdeg: int) -> np.ndarray:
    """Uniform over all exponent vectors whose total degree lies in [1, maxdeg]."""
    degrees = np.arange(1, maxdeg + 1)
    weights = np.array([comb(d + nvars - 1, nvars - 1) for d in degrees], dtype=float)
    d = int(rng.choice(degrees, p=weights / weights.sum()))
    if nvars == 1:
        return np.array([d], dtype=np.int64)
    bars = np.sort(rng.choice(d + nvars - 1, size=nvars - 1, replace=False))
    edges = np.concatenate(([-1], bars, [d + nvars - 1]))
    return (np.diff(edges) - 1).astype(np.int64)


def random_monomial_ideal(nvars: int, maxdeg: int, ngens: int, seed: SeedLike) -> MonomialIdeal:
    """
    Draw ngens generators uniformly from degrees 1..maxdeg and minimalize.

    Args:
        nvars: number of variables, at least 1
        maxdeg: largest generator degree, at least 1
        ngens: number of generators drawn before minimalization
        seed: int, SeedSequence or an existing Generator
    """
    if nvars < 1 or maxdeg < 1:
        raise ValueError(f"need nvars >= 1 and maxdeg >= 1, got ({nvars}, {maxdeg})")
    rng = _rng(seed)
    gens = [tuple(int(e) for e in random_exponent_vector(rng, nvars, maxdeg)) for _ in range(ngens)]
    return MonomialIdeal(nvars, tuple(gens))
