"""
Generating functions N(t) / (1-t)^d.

GenFun is the carrier for every Hilbert series in the package. Construction
divides out common (1-t) factors, so two GenFun values are equal exactly when
they describe the same power series.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from sympy import Poly, QQ

from ratcalc.polynomial import coefficients, degree, evaluate, monomial, poly, t
from ratcalc.rational import RatLike, format_rat, to_rat, to_sympy

ONE_MINUS_T = poly([1, -1], t)


class AmbientSpaceError(ValueError):
    """A series does not live in the requested space V_{n,a}."""


@dataclass(frozen=True)
class GenFun:
    den_exp: int
    numer: Poly

    def __post_init__(self):
        if self.den_exp < 0:
            raise ValueError(f"denominator exponent must be non-negative, got {self.den_exp}")
        numer = Poly(self.numer, t, domain=QQ)
        d = self.den_exp
        if numer.is_zero:
            d = 0
        while d > 0 and evaluate(numer, 1) == 0:
            numer = numer.quo(ONE_MINUS_T)
            d -= 1
        object.__setattr__(self, 'numer', numer)
        object.__setattr__(self, 'den_exp', d)

    # --- constructors ---

    @classmethod
    def from_coeffs(cls, numer: Sequence[RatLike], den_exp: int = 0) -> 'GenFun':
        return cls(den_exp, poly(numer, t))

    @classmethod
    def zero(cls) -> 'GenFun':
        return cls(0, poly([], t))

    @classmethod
    def one_minus_t_power(cls, i: int) -> 'GenFun':
        """(1-t)^i for any integer i."""
        if i >= 0:
            return cls(0, ONE_MINUS_T ** i)
        return cls(-i, poly([1], t))

    @classmethod
    def t_power(cls, k: int) -> 'GenFun':
        return cls(0, monomial(k, 1, t))

    # --- arithmetic ---

    def numerator_over(self, n: int) -> Poly:
        """The numerator once the series is written over (1-t)^n."""
        if n < self.den_exp:
            raise AmbientSpaceError(
                f"series needs (1-t)^{self.den_exp} in the denominator, not (1-t)^{n}"
            )
        return self.numer * ONE_MINUS_T ** (n - self.den_exp)

    def __add__(self, other: 'GenFun') -> 'GenFun':
        d = max(self.den_exp, other.den_exp)
        return GenFun(d, self.numerator_over(d) + other.numerator_over(d))

    def __neg__(self) -> 'GenFun':
        return self.scale(-1)

    def __sub__(self, other: 'GenFun') -> 'GenFun':
        return self + (-other)

    def scale(self, c: RatLike) -> 'GenFun':
        return GenFun(self.den_exp, self.numer.mul_ground(to_sympy(c)))

    def shift(self, k: int) -> 'GenFun':
        """Multiply by t^k."""
        return GenFun(self.den_exp, self.numer * monomial(k, 1, t))

    def times_one_minus_t(self, k: int) -> 'GenFun':
        """Multiply by (1-t)^k, k >= 0; on sequences this is the k-th backward difference."""
        if k < 0:
            raise ValueError(f"power of (1-t) must be non-negative, got {k}")
        return GenFun(self.den_exp, self.numer * ONE_MINUS_T ** k)

    # --- predicates ---

    @property
    def is_zero(self) -> bool:
        return self.numer.is_zero

    def a_invariant(self) -> Optional[int]:
        """Least a with the series in V_{n,a} (any n >= den_exp); None for zero."""
        if self.is_zero:
            return None
        return int(degree(self.numer)) - self.den_exp

    def in_space(self, n: int, a: int) -> bool:
        """Membership in V_{n,a}: denominator (1-t)^n, numerator degree <= a+n."""
        if self.is_zero:
            return True
        return self.den_exp <= n and self.a_invariant() <= a

    def require_space(self, n: int, a: int) -> 'GenFun':
        if not self.in_space(n, a):
            raise AmbientSpaceError(f"not in V_{{{n},{a}}}: {self}")
        return self

    def numer_coeffs(self) -> List[Fraction]:
        return coefficients(self.numer)

    # --- wire format ---

    def to_dict(self) -> Dict:
        return {
            'den_exp': self.den_exp,
            'numer': [format_rat(c) for c in self.numer_coeffs()],
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> 'GenFun':
        try:
            den_exp = payload['den_exp']
            if isinstance(den_exp, bool) or not isinstance(den_exp, int):
                raise TypeError(f"den_exp must be an integer, got {den_exp!r}")
            numer = [to_rat(c) for c in payload['numer']]
        except (KeyError, TypeError) as exc:
            raise AmbientSpaceError(f"malformed series object: {payload!r}") from exc
        return cls.from_coeffs(numer, den_exp)

    def __str__(self) -> str:
        terms = [f"{format_rat(c)}*t^{k}" for k, c in enumerate(self.numer_coeffs()) if c]
        body = ' + '.join(terms) or '0'
        if self.den_exp == 0:
            return body
        return f"({body})/(1-t)^{self.den_exp}"
