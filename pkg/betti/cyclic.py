"""
Betti tables of S/<x_0..x_{l-1}>^d, which have a linear resolution.
"""

from fractions import Fraction
from math import comb

from betti.tables import BettiTable
from modules_oracle.modules import CyclicPowerModule, ModuleSum


def betti_cyclic_power(mod: CyclicPowerModule) -> BettiTable:
    """
    beta_{0,0} = 1 and beta_{i, i+d-1} = i/(i+d-1) * binom(l+d-1, l) * binom(l, i)
    for 1 <= i <= l; every other entry is zero.
    """
    ell, d = mod.ell, mod.power
    entries = {(0, 0): Fraction(1)}
    for i in range(1, ell + 1):
        entries[(i, d - 1)] = Fraction(i, i + d - 1) * comb(ell + d - 1, ell) * comb(ell, i)
    return BettiTable(entries)


def betti_module_sum(ms: ModuleSum) -> BettiTable:
    """Betti tables add over direct sums, weighted by multiplicity."""
    out = BettiTable()
    for mod, mult in ms.summands:
        out = out + betti_cyclic_power(mod).scale(mult)
    return out
