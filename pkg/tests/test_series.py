from fractions import Fraction
from math import comb

import pytest

from conftest import random_genfun, random_poly, random_rat
from ratcalc.polynomial import evaluate, poly
from series.coordinates import RCoordinates, r_coordinates, rcoords_to_genfun
from series.genfun import AmbientSpaceError, GenFun
from series.ops import (
    apply_T,
    coeff_at,
    coefficients_upto,
    eigen_coordinates,
    hilbert_polynomial,
    invert_T,
    poly_tail_to_genfun,
)


def test_common_factors_are_divided_out():
    g = GenFun.from_coeffs([1, -1], 2)
    assert g == GenFun.one_minus_t_power(-1)
    assert g.den_exp == 1
    assert GenFun.from_coeffs([0, 0], 3) == GenFun.zero()
    assert GenFun.zero().den_exp == 0


def test_a_invariant_and_space():
    g = GenFun.from_coeffs([1, 2], 2)
    assert g.a_invariant() == -1
    assert g.in_space(2, -1)
    assert g.in_space(3, 0)
    assert not g.in_space(1, 5)
    assert not g.in_space(2, -2)
    with pytest.raises(AmbientSpaceError):
        g.require_space(1, 0)
    assert GenFun.zero().a_invariant() is None


def test_coefficients_of_simple_series():
    assert coefficients_upto(GenFun.one_minus_t_power(-2), 4) == [1, 2, 3, 4, 5]
    # (1 + 2t) / (1-t)^2 has h(j) = 3j + 1
    assert coefficients_upto(GenFun.from_coeffs([1, 2], 2), 4) == [1, 4, 7, 10, 13]
    assert coeff_at(GenFun.t_power(3), 3) == 1
    assert coeff_at(GenFun.t_power(3), 2) == 0


def test_arithmetic_is_coefficientwise(rng):
    for _ in range(10):
        f = random_genfun(rng, 2, 1)
        g = random_genfun(rng, 3, -1)
        total = f + g.scale(Fraction(2, 3))
        for j in range(8):
            assert coeff_at(total, j) == coeff_at(f, j) + Fraction(2, 3) * coeff_at(g, j)
        assert (f - f).is_zero


def test_shift_multiplies_by_t_power():
    g = GenFun.from_coeffs([1, 2], 2).shift(2)
    assert coefficients_upto(g, 4) == [0, 0, 1, 4, 7]


def test_hilbert_polynomial_agrees_past_a(rng):
    for _ in range(10):
        n = int(rng.integers(1, 4))
        a = int(rng.integers(-n, 3))
        g = random_genfun(rng, n, a)
        q = hilbert_polynomial(g, a)
        for j in range(max(a + 1, 0), a + 8):
            assert evaluate(q, j) == coeff_at(g, j)


def test_hilbert_polynomial_rejects_large_numerator():
    with pytest.raises(AmbientSpaceError):
        hilbert_polynomial(GenFun.from_coeffs([1, 1, 1], 1), 0)


def test_poly_tail_to_genfun():
    P = poly([1, 0, 1])
    g = poly_tail_to_genfun(P, 3)
    assert coefficients_upto(g, 2) == [0, 0, 0]
    for j in range(3, 10):
        assert coeff_at(g, j) == j * j + 1
    assert poly_tail_to_genfun(poly([]), 2).is_zero


def test_poly_tail_to_genfun_agrees_with_evaluation(rng):
    for _ in range(30):
        P = random_poly(rng, 5)
        start = int(rng.integers(0, 6))
        g = poly_tail_to_genfun(P, start)
        for j in range(start + int(max(P.degree(), 0)) + 6):
            expected = evaluate(P, j) if j >= start else 0
            assert coeff_at(g, j) == expected


def test_apply_T_matches_sequence_rule(rng):
    for _ in range(10):
        n = int(rng.integers(0, 4))
        a = int(rng.integers(-n, 3))
        g = random_genfun(rng, n, a)
        image = apply_T(g, n)
        assert image.in_space(n, a)
        for j in range(10):
            expected = (n + j + 1) * coeff_at(g, j) - (j + 1) * coeff_at(g, j + 1)
            assert coeff_at(image, j) == expected


def test_T_eigenvalues_on_powers_of_one_minus_t():
    for n in range(0, 7):
        for i in range(-n, 5):
            basis = GenFun.one_minus_t_power(i)
            assert apply_T(basis, n) == basis.scale(n + 1 + i)


def test_invert_T_undoes_T(rng):
    for _ in range(10):
        n = int(rng.integers(0, 4))
        a = int(rng.integers(-n, 3))
        g = random_genfun(rng, n, a)
        assert invert_T(apply_T(g, n), n, a) == g
        assert apply_T(invert_T(g, n, a), n) == g


def test_eigen_coordinates_length_and_errors():
    g = GenFun.one_minus_t_power(-3)
    assert eigen_coordinates(g, 3, -1) == [1, 0, 0]
    with pytest.raises(AmbientSpaceError):
        eigen_coordinates(g, 2, 0)
    with pytest.raises(AmbientSpaceError):
        eigen_coordinates(GenFun.zero(), 2, -3)


def test_r_coordinates_of_linear_series():
    # h(j) = 3j + 1, Hilbert polynomial 3s + 1
    g = GenFun.from_coeffs([1, 2], 2)
    coords = r_coordinates(g, 3, 1)
    assert coords.head == (1, 4)
    assert coords.tail == (4, 3, 0, 0)
    assert coords.n == 3
    assert coords.m == 1
    assert rcoords_to_genfun(coords) == g


def test_r_coordinates_rebuild_random_series(rng):
    for _ in range(10):
        n = int(rng.integers(0, 4))
        m = int(rng.integers(0, 4))
        g = random_genfun(rng, n + 1, m)
        coords = r_coordinates(g, n, m)
        assert len(coords.tail) == n + 1
        assert rcoords_to_genfun(coords) == g


def test_r_coordinates_are_linear(rng):
    for _ in range(10):
        n = int(rng.integers(0, 4))
        m = int(rng.integers(0, 4))
        f = random_genfun(rng, n + 1, m)
        g = random_genfun(rng, n + 1, m)
        x, y = random_rat(rng), random_rat(rng)
        combined = r_coordinates(f.scale(x) + g.scale(y), n, m)
        cf, cg = r_coordinates(f, n, m), r_coordinates(g, n, m)
        assert combined.head == tuple(x * p + y * q for p, q in zip(cf.head, cg.head))
        assert combined.tail == tuple(x * p + y * q for p, q in zip(cf.tail, cg.tail))


def test_r_coordinates_reject_outside_space():
    with pytest.raises(AmbientSpaceError, match='not in V_'):
        r_coordinates(GenFun.one_minus_t_power(-3), 1, 0)


def test_tail_coordinates_are_differences():
    coords = RCoordinates((1, 2), (5, 1))
    assert coords.tail_at(1) == 5
    assert coords.tail_at(2) == 1
    g = rcoords_to_genfun(coords)
    # h(j) for j > m is the polynomial 5 + (j - m) with differences read at m
    assert [coeff_at(g, j) for j in range(2, 5)] == [6, 7, 8]


def test_wire_format():
    g = GenFun.from_coeffs([Fraction(1, 2), -3], 2)
    payload = g.to_dict()
    assert payload == {'den_exp': 2, 'numer': ['1/2', '-3']}
    assert GenFun.from_dict(payload) == g
    with pytest.raises(AmbientSpaceError):
        GenFun.from_dict({'numer': ['1']})


@pytest.mark.parametrize('den_exp', [2.5, 2.0, '2', True, None])
def test_wire_format_rejects_non_integer_exponent(den_exp):
    with pytest.raises(AmbientSpaceError, match='malformed'):
        GenFun.from_dict({'den_exp': den_exp, 'numer': ['1']})


def test_binomial_coefficients_of_pure_denominator():
    for d in range(1, 5):
        g = GenFun.one_minus_t_power(-d)
        assert coefficients_upto(g, 5) == [comb(d - 1 + j, d - 1) for j in range(6)]
