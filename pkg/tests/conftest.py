import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from ratcalc.polynomial import poly  # noqa: E402
from series.genfun import GenFun  # noqa: E402

GOLDEN = Path(__file__).resolve().parent / 'golden'


def random_rat(rng: np.random.Generator, lo: int = -9, hi: int = 9, max_den: int = 5) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, max_den + 1)))


def random_genfun(rng: np.random.Generator, n: int, a: int) -> GenFun:
    """Random element of V_{n,a}: numerator of degree <= a+n over (1-t)^n."""
    return GenFun.from_coeffs([random_rat(rng) for _ in range(a + n + 1)], n)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


def random_poly(rng: np.random.Generator, max_degree: int):
    """Random polynomial in s with rational coefficients, degree <= max_degree."""
    size = int(rng.integers(1, max_degree + 2))
    return poly([random_rat(rng) for _ in range(size)])
