import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from conftest import random_poly
from ratcalc.partitions import Partition, p_lambda, partitions_bounded
from ratcalc.polynomial import (
    backward_difference,
    binom_poly,
    cauchy_bound,
    coefficients,
    evaluate,
    integer_nonneg_on_ray,
    integer_roots,
    linear,
    poly,
    s,
    scale,
)
from ratcalc.positivity import LemmaPosError, lemma_pos_decompose
from ratcalc.rational import RationalParseError, format_rat, parse_rat, to_rat


def test_parse_and_format_rationals():
    assert parse_rat('3/6') == Fraction(1, 2)
    assert parse_rat(' -4 ') == Fraction(-4)
    assert format_rat(Fraction(6, 3)) == '2'
    assert format_rat(Fraction(-9, 2)) == '-9/2'
    assert to_rat(sympy.Rational(2, 7)) == Fraction(2, 7)


@pytest.mark.parametrize('text', ['0.5', '1e3', '', '1/0', 'x'])
def test_parse_rejects_inexact_text(text):
    with pytest.raises(RationalParseError):
        parse_rat(text)


def test_to_rat_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(TypeError):
        to_rat(True)


def test_zero_polynomial_has_no_coefficients():
    z = poly([])
    assert coefficients(z) == []
    assert z.degree() == -sympy.oo
    assert evaluate(z, 5) == 0


def test_binom_poly_matches_binomials():
    p = binom_poly(3, 2)
    for j in range(0, 10):
        assert evaluate(p, j) == sympy.binomial(j + 2, 3)


def test_backward_difference_lowers_degree():
    q = poly([1, 0, 3])
    d1 = backward_difference(q)
    assert coefficients(d1) == [Fraction(-3), Fraction(6)]
    assert backward_difference(q, 3).is_zero


def test_integer_roots_in_increasing_order():
    p = linear(3) * linear(-2) * linear(Fraction(1, 2))
    assert integer_roots(p) == [-3, 2]
    assert integer_roots(poly([5])) == []


def test_nonneg_on_ray_reports_smallest_witness():
    p = linear(-2) * linear(-5)
    assert not integer_nonneg_on_ray(p, 0).nonneg
    assert integer_nonneg_on_ray(p, 0).witness == 3
    assert integer_nonneg_on_ray(p, 5)


def test_nonneg_on_ray_negative_lead():
    p = scale(linear(-40), -1)
    decision = integer_nonneg_on_ray(p, 0)
    assert not decision
    assert decision.witness == 41
    assert integer_nonneg_on_ray(poly([7]), 0)


def test_nonneg_on_ray_agrees_with_evaluation(rng):
    for _ in range(100):
        p = random_poly(rng, 5)
        start = int(rng.integers(-6, 7))
        horizon = start + 10 * math.ceil(cauchy_bound(p))
        violations = [j for j in range(start, horizon + 1) if evaluate(p, j) < 0]
        decision = integer_nonneg_on_ray(p, start)
        assert decision.nonneg == (not violations), p
        if violations:
            assert decision.witness == violations[0], p


def test_nonneg_on_ray_with_large_coefficients():
    big = 10 ** 9
    assert integer_nonneg_on_ray(poly([big, 0, 1]), 0)
    # negative only on the open interval of width 1 around 10^6
    dip = linear(-10 ** 6) * linear(-10 ** 6) - poly([Fraction(1, 4)])
    decision = integer_nonneg_on_ray(dip, 0)
    assert decision.witness == 10 ** 6
    assert integer_nonneg_on_ray(dip, 10 ** 6 + 1)
    assert integer_roots(linear(10 ** 6) * linear(-3)) == [-10 ** 6, 3]


def test_backward_difference_annihilates_past_degree(rng):
    for _ in range(30):
        q = random_poly(rng, 6)
        if q.is_zero:
            continue
        assert backward_difference(q, int(q.degree()) + 1).is_zero
        if q.degree() > 0:
            assert not backward_difference(q, int(q.degree())).is_zero


def test_partitions_bounded_counts():
    assert [str(p) for p in partitions_bounded(1, 1)] == ['', '0', '1']
    # at most 2 parts, each <= 2: 1 + 3 + 6
    assert len(list(partitions_bounded(2, 2))) == 10
    assert list(partitions_bounded(-1, 3)) == []


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((-1,))
    assert Partition.of([3, 1]).largest == 3


def test_p_lambda_nonnegative_on_integers():
    for lam in partitions_bounded(3, 4):
        top = lam.largest + 2 * lam.length + 3
        for j in range(top + 1):
            assert evaluate(p_lambda(lam), j) >= 0, lam


def test_p_lambda_roots():
    assert integer_roots(p_lambda(Partition((0,)))) == [0, 1]
    assert integer_roots(p_lambda(Partition((1, 0)))) == [0, 1, 3, 4]
    assert p_lambda(Partition(())).degree() == 0


@pytest.mark.parametrize('factors, expected', [
    ([1], [0, 1]),
    ([1, 2], [0, 0, 2]),
    ([2, 3], [2, 2, 2]),
])
def test_lemma_pos_examples(factors, expected):
    f = poly([1])
    for shift in factors:
        f = f * linear(shift)
    assert lemma_pos_decompose(f) == [Fraction(c) for c in expected]


def test_lemma_pos_on_far_roots():
    f = poly([1])
    for shift in range(7, 13):
        f = f * linear(shift)
    coeffs = lemma_pos_decompose(f)
    assert len(coeffs) == 7
    assert all(c >= 0 for c in coeffs)
    rebuilt = poly([])
    for k, c in enumerate(coeffs):
        rebuilt = rebuilt + scale(binom_poly(k, k), c)
    assert rebuilt == f


def test_lemma_pos_reconstructs(rng):
    for _ in range(200):
        size = int(rng.integers(0, 7))
        roots = sorted(int(r) for r in rng.choice(np.arange(1, 13), size=size, replace=False))
        lead = Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 4)))
        f = scale(poly([1]), lead)
        for r in roots:
            f = f * linear(r)
        coeffs = lemma_pos_decompose(f)
        assert all(c >= 0 for c in coeffs)
        rebuilt = poly([])
        for k, c in enumerate(coeffs):
            rebuilt = rebuilt + scale(binom_poly(k, k), c)
        assert rebuilt == f


@pytest.mark.parametrize('f', [
    linear(-1),
    linear(1) * linear(1),
    scale(linear(1), -1),
    poly([]),
])
def test_lemma_pos_rejects_bad_input(f):
    with pytest.raises(LemmaPosError, match='lemma-pos precondition violated'):
        lemma_pos_decompose(f)
