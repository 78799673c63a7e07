"""
Ground-truth Hilbert functions.

hf_monomial_quotient counts standard monomials by brute force and shares no
code with the closed forms below it, so the two can check each other.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import List

import numpy as np

from ratcalc.polynomial import poly, t
from series.genfun import GenFun
from series.ops import coeff_at
from modules_oracle.modules import CyclicPowerModule, ModuleSum, MonomialIdeal


@lru_cache(maxsize=256)
def compositions(j: int, k: int) -> np.ndarray:
    """All exponent vectors of length k and total degree j, one per row."""
    if k == 0:
        return np.zeros((1 if j == 0 else 0, 0), dtype=np.int64)
    rows = []
    for bars in combinations(range(j + k - 1), k - 1):
        edges = (-1,) + bars + (j + k - 1,)
        rows.append([edges[i + 1] - edges[i] - 1 for i in range(k)])
    out = np.array(rows, dtype=np.int64).reshape(len(rows), k)
    out.flags.writeable = False
    return out


def hf_monomial_quotient(ideal: MonomialIdeal, j: int) -> int:
    """Number of degree-j monomials divisible by no generator of the ideal."""
    if j < 0:
        raise ValueError(f"degree must be non-negative, got {j}")
    monomials = compositions(j, ideal.nvars)
    gens = ideal.gens_array()
    if len(gens) == 0:
        return int(len(monomials))
    divisible = (monomials[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return int(np.count_nonzero(~divisible))


def hilbert_function(ideal: MonomialIdeal, upto: int) -> List[int]:
    return [hf_monomial_quotient(ideal, j) for j in range(upto + 1)]


def cyclic_power_ideal(nvars: int, ell: int, power: int) -> MonomialIdeal:
    """<x_0, ..., x_{ell-1}>^power inside nvars variables."""
    pad = (0,) * (nvars - ell)
    gens = tuple(tuple(row) + pad for row in compositions(power, ell).tolist())
    return MonomialIdeal(nvars, gens)


def hs_cyclic_power(mod: CyclicPowerModule, n: int) -> GenFun:
    """
    Closed-form Hilbert series of S/<x_0..x_{ell-1}>^i over S = k[x_0..x_n]:
    (1-t)^(ell-1-n) * sum_{k<i} binom(ell-1+k, k) t^k.
    """
    mod.check_ring(n)
    numer = [comb(mod.ell - 1 + k, k) for k in range(mod.power)]
    return GenFun(n + 1 - mod.ell, poly(numer, t))


def hs_module_sum(ms: ModuleSum, n: int) -> GenFun:
    out = GenFun.zero()
    for mod, mult in ms.summands:
        out = out + hs_cyclic_power(mod, n).scale(mult)
    return out


def hf_module_sum(ms: ModuleSum, n: int, j: int) -> Fraction:
    return sum(
        (mult * coeff_at(hs_cyclic_power(mod, n), j) for mod, mult in ms.summands),
        Fraction(0),
    )
