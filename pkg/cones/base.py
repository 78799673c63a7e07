"""
Cone identifiers, membership certificates and check composition.

A Check is any callable that takes a GenFun and returns the first Violation
it finds, or None. Checks compose with composite_and; membership for each
cone is a composite of coefficient, facet and limiting checks.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional

from series.genfun import GenFun


class ConeKind(str, Enum):
    P = 'P'
    Q = 'Q'
    R = 'R'


@dataclass(frozen=True)
class ConeId:
    """P_{n,a}, Q_{n,a} (bound = a >= -n) or R_{n,m} (bound = m >= 0)."""
    kind: ConeKind
    n: int
    bound: int

    def __post_init__(self):
        object.__setattr__(self, 'kind', ConeKind(self.kind))
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.kind is ConeKind.R and self.bound < 0:
            raise ValueError(f"R_{{n,m}} needs m >= 0, got {self.bound}")
        if self.kind is not ConeKind.R and self.bound < -self.n:
            raise ValueError(f"{self.kind.value}_{{n,a}} needs a >= -n, got a = {self.bound}")

    def __str__(self) -> str:
        return f"{self.kind.value}_{{{self.n},{self.bound}}}"


VIOLATION_KINDS = ('coefficient', 'facet', 'infinity', 'equality', 'degree')


@dataclass(frozen=True)
class Violation:
    """
    kind: 'coefficient' (index j), 'facet' (index i), 'infinity' (no index)
    'equality' (index i of a backward difference that must vanish) or
    'degree' (index: the a-invariant that exceeds the regularity bound).
    """
    kind: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in VIOLATION_KINDS:
            raise ValueError(f"unknown violation kind {self.kind!r}")

    def to_dict(self) -> Dict:
        out = {'kind': self.kind}
        if self.index is not None:
            out['index'] = self.index
        return out


@dataclass(frozen=True)
class Certificate:
    member: bool
    violation: Optional[Violation] = None

    def __post_init__(self):
        if self.member != (self.violation is None):
            raise ValueError("a certificate carries a violation exactly when it rejects")

    @classmethod
    def accept(cls) -> 'Certificate':
        return cls(True)

    @classmethod
    def reject(cls, kind: str, index: Optional[int] = None) -> 'Certificate':
        return cls(False, Violation(kind, index))

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> Dict:
        return {
            'member': self.member,
            'violation': self.violation.to_dict() if self.violation else None,
        }


Check = Callable[[GenFun], Optional[Violation]]


def composite_and(*checks: Check) -> Check:
    """Run checks in order; the first violation wins."""
    def combined(g: GenFun) -> Optional[Violation]:
        for check in checks:
            found = check(g)
            if found is not None:
                return found
        return None
    combined.__name__ = ' AND '.join(getattr(c, '__name__', '?') for c in checks)
    return combined


def certify(check: Check, g: GenFun) -> Certificate:
    found = check(g)
    return Certificate.accept() if found is None else Certificate(False, found)
