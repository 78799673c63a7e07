"""
Ground-truth Hilbert functions for monomial quotients and cyclic power modules.

Usage:
    from modules_oracle.hilbert import hf_monomial_quotient, hs_cyclic_power
    from modules_oracle.campaign import MacaulayCampaign
"""

from modules_oracle.modules import CyclicPowerModule, ModuleSpecError, ModuleSum, MonomialIdeal
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
from modules_oracle.random_ideals import RNG_ALGORITHM, random_monomial_ideal
from modules_oracle.campaign import CampaignSummary, MacaulayCampaign

__all__ = [
    'CyclicPowerModule',
    'ModuleSpecError',
    'ModuleSum',
    'MonomialIdeal',
    'compositions',
    'cyclic_power_ideal',
    'hf_module_sum',
    'hf_monomial_quotient',
    'hilbert_function',
    'hs_cyclic_power',
    'hs_module_sum',
    'macaulay_check',
    'RNG_ALGORITHM',
    'random_monomial_ideal',
    'CampaignSummary',
    'MacaulayCampaign',
]
