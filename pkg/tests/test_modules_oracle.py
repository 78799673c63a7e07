from fractions import Fraction
from math import comb

import pandas as pd
import pytest

from modules_oracle.campaign import CampaignSummary, MacaulayCampaign
from modules_oracle.hilbert import (
    compositions,
    cyclic_power_ideal,
    hf_module_sum,
    hf_monomial_quotient,
    hilbert_function,
    hs_cyclic_power,
    hs_module_sum,
)
from modules_oracle.macaulay import macaulay_check
from modules_oracle.modules import CyclicPowerModule, ModuleSpecError, ModuleSum, MonomialIdeal
from modules_oracle.random_ideals import random_monomial_ideal
from series.ops import coeff_at, coefficients_upto


def test_compositions():
    assert compositions(2, 2).tolist() == [[0, 2], [1, 1], [2, 0]]
    assert len(compositions(3, 4)) == comb(6, 3)
    assert compositions(0, 0).shape == (1, 0)
    with pytest.raises(ValueError):
        compositions(2, 2)[0, 0] = 5


def test_ideal_is_minimalized():
    ideal = MonomialIdeal(2, ((1, 0), (2, 0), (1, 1), (0, 3)))
    assert ideal.gens == ((0, 3), (1, 0))
    assert MonomialIdeal.from_dict(ideal.to_dict()) == ideal


@pytest.mark.parametrize('gens', [((1,),), ((1, -1),)])
def test_ideal_rejects_bad_vectors(gens):
    with pytest.raises(ModuleSpecError):
        MonomialIdeal(2, gens)


def test_polynomial_ring_counts():
    assert hilbert_function(MonomialIdeal(3), 4) == [comb(j + 2, 2) for j in range(5)]


def test_brute_force_examples():
    # k[x, y] / <x^2, y^3>: 1, 2, 2, 1, 0
    ideal = MonomialIdeal(2, ((2, 0), (0, 3)))
    assert hilbert_function(ideal, 5) == [1, 2, 2, 1, 0, 0]
    with pytest.raises(ValueError):
        hf_monomial_quotient(ideal, -1)


@pytest.mark.parametrize('ell', range(1, 5))
def test_cyclic_power_closed_form_matches_brute_force(ell):
    for power in range(1, 6):
        mod = CyclicPowerModule(ell, power)
        brute = hilbert_function(cyclic_power_ideal(ell, ell, power), 12)
        assert coefficients_upto(hs_cyclic_power(mod, ell - 1), 12) == brute, mod
        # extra variables outside the ideal
        wide = hilbert_function(cyclic_power_ideal(ell + 1, ell, power), 12)
        assert coefficients_upto(hs_cyclic_power(mod, ell), 12) == wide, mod


def test_redundant_generators_do_not_change_counts(rng):
    for trial in range(20):
        ideal = random_monomial_ideal(3, 5, 4, seed=trial)
        if not ideal.gens:
            continue
        base = ideal.gens[int(rng.integers(0, len(ideal.gens)))]
        extra = tuple(e + int(x) for e, x in zip(base, rng.integers(0, 3, size=3)))
        widened = MonomialIdeal(3, ideal.gens + (extra,))
        assert widened == ideal
        assert hilbert_function(widened, 10) == hilbert_function(ideal, 10)


def test_cyclic_power_space_criterion():
    for n in range(0, 5):
        for ell in range(1, n + 2):
            for power in range(1, 7):
                g = hs_cyclic_power(CyclicPowerModule(ell, power), n)
                for a in range(-n, 4):
                    assert g.in_space(n, a) == (power <= a + n - ell + 2), (n, ell, power, a)


def test_cyclic_module_data():
    mod = CyclicPowerModule(2, 3)
    assert mod.dimension(3) == 2
    assert hs_cyclic_power(mod, 3).in_space(3, mod.min_a(3))
    assert not hs_cyclic_power(mod, 3).in_space(3, mod.min_a(3) - 1)
    with pytest.raises(ModuleSpecError):
        CyclicPowerModule(0, 1)
    with pytest.raises(ModuleSpecError):
        hs_cyclic_power(CyclicPowerModule(5, 1), 3)


def test_module_sum_normal_form():
    a = CyclicPowerModule(2, 1)
    b = CyclicPowerModule(1, 2)
    ms = ModuleSum.of([(a, 1), (b, Fraction(1, 2)), (a, Fraction(1, 3)), (b, 0)])
    ms = ms + ModuleSum.of([(b, Fraction(-1, 2) + 1)])
    assert ms.summands == ((b, Fraction(1)), (a, Fraction(4, 3)))
    assert ms.scale(3).multiplicities() == [3, 4]
    assert ModuleSum.from_list(ms.to_list()) == ms
    with pytest.raises(ModuleSpecError):
        ModuleSum.of([(a, -1)])
    with pytest.raises(ModuleSpecError):
        ModuleSum.from_list([{'ell': 1}])


def test_module_sum_series_is_linear():
    ms = ModuleSum.of([(CyclicPowerModule(3, 2), Fraction(2, 3)), (CyclicPowerModule(1, 1), 5)])
    g = hs_module_sum(ms, 2)
    for j in range(8):
        assert coeff_at(g, j) == hf_module_sum(ms, 2, j)


def test_macaulay_check():
    assert macaulay_check([1, 4, 0, 0], 3).member
    assert macaulay_check([1, 5], 3).violation.index == 0
    assert macaulay_check(['1', '2', '3', '5'], 1).violation.index == 2
    assert macaulay_check([], 2).member


def test_macaulay_holds_on_random_quotients(rng):
    for _ in range(25):
        nvars = int(rng.integers(1, 4))
        ideal = random_monomial_ideal(nvars, 5, int(rng.integers(1, 5)), rng)
        assert macaulay_check(hilbert_function(ideal, 10), nvars - 1).member, ideal


def test_random_ideal_is_reproducible():
    first = random_monomial_ideal(3, 6, 4, 11)
    assert random_monomial_ideal(3, 6, 4, 11) == first
    assert all(1 <= sum(g) <= 6 for g in first.gens)
    with pytest.raises(ValueError):
        random_monomial_ideal(0, 3, 1, 0)


def test_campaign_passes_and_ignores_worker_count():
    campaign = MacaulayCampaign(max_vars=3, maxdeg=5, max_gens=4, upto=8)
    serial = campaign.run(24, seed=5, max_workers=1)
    threaded = campaign.run(24, seed=5, max_workers=4)
    pd.testing.assert_frame_equal(serial, threaded)
    assert serial['trial'].tolist() == list(range(24))
    summary = MacaulayCampaign.summarize(serial, 5)
    assert summary == CampaignSummary(24, 24, 5)
    assert str(summary) == '24/24 pass'
    assert summary.to_dict()['rng'] == 'numpy.PCG64'


def test_campaign_seed_changes_draws():
    campaign = MacaulayCampaign(max_vars=3, maxdeg=5, max_gens=4, upto=6)
    a = campaign.run(10, seed=1)['ideal'].tolist()
    b = campaign.run(10, seed=2)['ideal'].tolist()
    assert a != b


def test_campaign_bounds():
    with pytest.raises(ValueError):
        MacaulayCampaign(max_vars=0)


def test_macaulay_campaign_at_scale():
    campaign = MacaulayCampaign(max_vars=5, maxdeg=8, max_gens=6, upto=12)
    table = campaign.run(500, seed=2024)
    summary = MacaulayCampaign.summarize(table, 2024)
    assert summary.trials == 500
    assert summary.failed == 0, table.loc[~table['passed'], 'ideal'].tolist()
