"""
Extreme-ray labels and their admissibility bounds.
"""

from dataclasses import dataclass
from typing import Dict, Union

from ratcalc.partitions import Partition


class RayLabelError(ValueError):
    """Label outside the admissible range, or of the wrong family."""


def a_hat(a: int) -> int:
    """a + max(1, -a): the first index of the polynomial tail of a series ray."""
    return a + max(1, -a)


def lambda_max_parts(n: int, a: int) -> int:
    return (n - a_hat(a) + a) // 2


def mu_max_parts(n: int, a: int) -> int:
    return (n - a_hat(a) + a - 1) // 2


@dataclass(frozen=True)
class PurePower:
    k: int

    def __str__(self) -> str:
        return f"power:{self.k}"


@dataclass(frozen=True)
class LambdaFamily:
    partition: Partition

    def __str__(self) -> str:
        return f"lambda:{self.partition}"


@dataclass(frozen=True)
class MuFamily:
    partition: Partition

    def __str__(self) -> str:
        return f"mu:{self.partition}"


@dataclass(frozen=True)
class Cyclic:
    """S/<x_0, ..., x_{ell-1}>^power."""
    ell: int
    power: int

    def __str__(self) -> str:
        return f"cyclic:{self.ell},{self.power}"


RayLabel = Union[PurePower, LambdaFamily, MuFamily, Cyclic]
SeriesFamily = (LambdaFamily, MuFamily)


def check_p_label(label: RayLabel, n: int, a: int) -> RayLabel:
    """
    Raises:
        RayLabelError: when the label is not an extreme ray of P_{n,a}
    """
    if a < -n:
        raise RayLabelError(f"P_{{{n},{a}}} needs a >= -n")
    if isinstance(label, PurePower):
        if not 0 <= label.k <= a:
            raise RayLabelError(f"label out of range: t^{label.k} needs 0 <= k <= a = {a}")
    elif isinstance(label, LambdaFamily):
        bound = lambda_max_parts(n, a)
        if label.partition.length > bound:
            raise RayLabelError(
                f"label out of range: lambda has {label.partition.length} parts, at most {bound} allowed"
            )
    elif isinstance(label, MuFamily):
        bound = mu_max_parts(n, a)
        if label.partition.length > bound:
            raise RayLabelError(
                f"label out of range: mu has {label.partition.length} parts, at most {bound} allowed"
            )
    else:
        raise RayLabelError(f"{label} is not a ray label of P_{{{n},{a}}}")
    return label


def parse_label(text: str) -> RayLabel:
    """Parse 'power:k', 'lambda:3,1', 'lambda:', 'mu:2' or 'cyclic:ell,i'."""
    kind, sep, rest = text.strip().partition(':')
    if not sep:
        raise RayLabelError(f"ray label needs a 'kind:' prefix: {text!r}")
    try:
        numbers = [int(x) for x in rest.split(',') if x.strip() != '']
    except ValueError as exc:
        raise RayLabelError(f"bad ray label {text!r}") from exc
    try:
        if kind == 'power' and len(numbers) == 1:
            return PurePower(numbers[0])
        if kind == 'lambda':
            return LambdaFamily(Partition.of(numbers))
        if kind == 'mu':
            return MuFamily(Partition.of(numbers))
        if kind == 'cyclic' and len(numbers) == 2:
            return Cyclic(numbers[0], numbers[1])
    except ValueError as exc:
        raise RayLabelError(f"bad ray label {text!r}: {exc}") from exc
    raise RayLabelError(f"bad ray label {text!r}")


def label_to_dict(label: RayLabel) -> Dict:
    if isinstance(label, PurePower):
        return {'variant': 'power', 'k': label.k}
    if isinstance(label, LambdaFamily):
        return {'variant': 'lambda', 'parts': list(label.partition.parts)}
    if isinstance(label, MuFamily):
        return {'variant': 'mu', 'parts': list(label.partition.parts)}
    return {'variant': 'cyclic', 'ell': label.ell, 'power': label.power}
