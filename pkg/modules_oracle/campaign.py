"""
Seeded Macaulay-inequality campaign over random monomial quotients.

Each trial draws its own ideal from a child of SeedSequence(seed), so the
result table does not depend on the worker count or on completion order.
"""

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from modules_oracle.hilbert import hilbert_function
from modules_oracle.macaulay import macaulay_check
from modules_oracle.random_ideals import RNG_ALGORITHM, random_monomial_ideal

logger = logging.getLogger(__name__)

DEFAULT_WORKERS = int(os.environ.get('HILBERT_CONES_WORKERS', '1'))

COLUMNS = ['trial', 'nvars', 'ngens', 'passed', 'violation_j', 'ideal']


@dataclass(frozen=True)
class CampaignSummary:
    trials: int
    passed: int
    seed: int
    rng: str = RNG_ALGORITHM

    @property
    def failed(self) -> int:
        return self.trials - self.passed

    def to_dict(self) -> Dict:
        return {
            'trials': self.trials,
            'passed': self.passed,
            'failed': self.failed,
            'seed': self.seed,
            'rng': self.rng,
        }

    def __str__(self) -> str:
        return f"{self.passed}/{self.trials} pass"


class MacaulayCampaign:
    """Runs macaulay_check against brute-force Hilbert functions of random ideals."""

    def __init__(
        self,
        max_vars: int = 4,
        maxdeg: int = 8,
        max_gens: int = 6,
        upto: int = 12,
    ):
        if max_vars < 1 or maxdeg < 1 or max_gens < 1 or upto < 1:
            raise ValueError("campaign bounds must all be positive")
        self.max_vars = max_vars
        self.maxdeg = maxdeg
        self.max_gens = max_gens
        self.upto = upto

    def run_trial(self, trial: int, seed_seq: np.random.SeedSequence) -> Dict:
        """One trial: draw sizes and an ideal from the trial's own stream."""
        rng = np.random.default_rng(seed_seq)
        nvars = int(rng.integers(1, self.max_vars + 1))
        ngens = int(rng.integers(1, self.max_gens + 1))
        ideal = random_monomial_ideal(nvars, self.maxdeg, ngens, rng)
        h = hilbert_function(ideal, self.upto)
        cert = macaulay_check(h, nvars - 1)
        return {
            'trial': trial,
            'nvars': nvars,
            'ngens': len(ideal.gens),
            'passed': cert.member,
            'violation_j': cert.violation.index if cert.violation else None,
            'ideal': json.dumps(ideal.to_dict(), separators=(',', ':')),
        }

    def run(self, trials: int, seed: int, max_workers: Optional[int] = None) -> pd.DataFrame:
        """
        Run the campaign.

        Args:
            trials: number of random ideals
            seed: root seed; trial k uses SeedSequence(seed).spawn(trials)[k]
            max_workers: worker threads (default: HILBERT_CONES_WORKERS or 1)

        Returns:
            DataFrame with one row per trial, sorted by trial index
        """
        workers = max_workers or DEFAULT_WORKERS
        children = np.random.SeedSequence(seed).spawn(trials)
        rows: List[Dict] = []
        logger.info("Running %d Macaulay trials (%d workers, seed %d, %s)",
                    trials, workers, seed, RNG_ALGORITHM)

        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(self.run_trial, k, child): k
                for k, child in enumerate(children)
            }
            for done, future in enumerate(as_completed(futures), start=1):
                rows.append(future.result())
                if done % 100 == 0 or done == trials:
                    logger.info("  Progress: %d/%d trials", done, trials)

        table = pd.DataFrame(rows, columns=COLUMNS)
        if not table.empty:
            table = table.sort_values('trial').reset_index(drop=True)
        return table

    @staticmethod
    def summarize(table: pd.DataFrame, seed: int) -> CampaignSummary:
        return CampaignSummary(trials=len(table), passed=int(table['passed'].sum()), seed=seed)
