"""
Module descriptions used by the oracle and by the realization code.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ratcalc.rational import RatLike, format_rat, to_rat


class ModuleSpecError(ValueError):
    """Module data outside its allowed range."""


def minimalize(gens: np.ndarray) -> np.ndarray:
    """Drop every generator divisible by another; rows are exponent vectors."""
    kept: List[np.ndarray] = []
    for m in sorted(gens.tolist()):
        m = np.asarray(m)
        if all(not np.all(m >= g) for g in kept):
            kept = [g for g in kept if not np.all(g >= m)]
            kept.append(m)
    if not kept:
        return np.zeros((0, gens.shape[1]), dtype=np.int64)
    return np.array(sorted(g.tolist() for g in kept), dtype=np.int64)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in nvars variables, kept on its minimal generators."""
    nvars: int
    gens: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.nvars < 1:
            raise ModuleSpecError(f"need at least one variable, got {self.nvars}")
        rows = [tuple(int(e) for e in g) for g in self.gens]
        for g in rows:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise ModuleSpecError(f"bad exponent vector {g} for {self.nvars} variables")
        if rows:
            reduced = minimalize(np.array(rows, dtype=np.int64))
            rows = [tuple(int(e) for e in g) for g in reduced]
        object.__setattr__(self, 'gens', tuple(rows))

    def gens_array(self) -> np.ndarray:
        if not self.gens:
            return np.zeros((0, self.nvars), dtype=np.int64)
        return np.array(self.gens, dtype=np.int64)

    def to_dict(self) -> Dict:
        return {'nvars': self.nvars, 'gens': [list(g) for g in self.gens]}

    @classmethod
    def from_dict(cls, payload: Dict) -> 'MonomialIdeal':
        try:
            return cls(int(payload['nvars']), tuple(tuple(g) for g in payload['gens']))
        except (KeyError, TypeError) as exc:
            raise ModuleSpecError(f"malformed ideal object: {payload!r}") from exc


@dataclass(frozen=True, order=True)
class CyclicPowerModule:
    """S / <x_0, ..., x_{ell-1}>^power."""
    ell: int
    power: int

    def __post_init__(self):
        if self.ell < 1 or self.power < 1:
            raise ModuleSpecError(f"need ell >= 1 and power >= 1, got ({self.ell}, {self.power})")

    def check_ring(self, n: int) -> 'CyclicPowerModule':
        if self.ell > n + 1:
            raise ModuleSpecError(f"ell = {self.ell} exceeds the {n + 1} variables of S")
        return self

    def dimension(self, n: int) -> int:
        return n + 1 - self.ell

    def min_a(self, n: int) -> int:
        """Least a with the Hilbert series in V_{n,a}."""
        return self.power + self.ell - n - 2

    def __str__(self) -> str:
        return f"S/<x_0..x_{self.ell - 1}>^{self.power}"


@dataclass(frozen=True)
class ModuleSum:
    """Direct sum with non-negative rational multiplicities."""
    summands: Tuple[Tuple[CyclicPowerModule, Fraction], ...] = field(default_factory=tuple)

    def __post_init__(self):
        merged: Dict[CyclicPowerModule, Fraction] = {}
        for mod, mult in self.summands:
            mult = to_rat(mult)
            if mult < 0:
                raise ModuleSpecError(f"negative multiplicity {mult} for {mod}")
            merged[mod] = merged.get(mod, Fraction(0)) + mult
        clean = tuple(sorted((mod, mult) for mod, mult in merged.items() if mult != 0))
        object.__setattr__(self, 'summands', clean)

    @classmethod
    def of(cls, pairs: Sequence[Tuple[CyclicPowerModule, RatLike]]) -> 'ModuleSum':
        return cls(tuple((mod, to_rat(mult)) for mod, mult in pairs))

    def __add__(self, other: 'ModuleSum') -> 'ModuleSum':
        return ModuleSum(self.summands + other.summands)

    def scale(self, c: RatLike) -> 'ModuleSum':
        c = to_rat(c)
        return ModuleSum(tuple((mod, mult * c) for mod, mult in self.summands))

    def multiplicities(self) -> List[Fraction]:
        return [mult for _, mult in self.summands]

    def to_list(self) -> List[Dict]:
        return [
            {'ell': mod.ell, 'power': mod.power, 'mult': format_rat(mult)}
            for mod, mult in self.summands
        ]

    @classmethod
    def from_list(cls, rows: Sequence[Dict]) -> 'ModuleSum':
        try:
            return cls(tuple(
                (CyclicPowerModule(int(r['ell']), int(r['power'])), to_rat(r['mult']))
                for r in rows
            ))
        except (KeyError, TypeError) as exc:
            raise ModuleSpecError(f"malformed module sum: {rows!r}") from exc
