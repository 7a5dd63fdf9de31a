#!/usr/bin/env python3
# encoding: utf-8

import math
import numpy as np

from dataclasses import dataclass
from scipy.stats import binom
from typing import Tuple

from qcp.common.exceptions import OverflowGuard
from qcp.utils.sundry_utils import (chunk_slices,
                                    make_rng)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

MAX_TRIALS = 10 ** 6
META_TRIAL_STREAM = 3


def chebyshev_frequency_bound(p: float, eps: float, n: int) -> float:
    '''
    p(1 - p) / (eps^2 N), bounding P^N(|X_N - p| >= eps)
    '''
    assert 0 < p < 1, f'p must lie in (0, 1), got {p}.'
    assert eps > 0 and n >= 1, 'eps > 0 and N >= 1 are required.'
    return p * (1 - p) / (eps ** 2 * n)


def frequency_window(p: float, eps: float, n: int) -> Tuple[int, int]:
    '''
    smallest and largest count k with |k/N - p| <= eps (hi < lo when none)
    '''
    lo = max(0, math.ceil(n * (p - eps) - 1e-9))
    hi = min(n, math.floor(n * (p + eps) + 1e-9))
    return lo, hi


def exact_frequency_event(p: float, eps: float, n: int) -> float:
    '''
    P^N(|k/N - p| <= eps) for Bernoulli(p) trials, summed in log space.
    '''
    assert 0 <= p <= 1, f'p must lie in [0, 1], got {p}.'
    assert eps >= 0 and n >= 1, 'eps >= 0 and N >= 1 are required.'
    if n > MAX_TRIALS:
        raise OverflowGuard(f'N = {n} exceeds {MAX_TRIALS}')
    lo, hi = frequency_window(p, eps, n)
    if hi < lo:
        return 0.0
    logs = binom.logpmf(np.arange(lo, hi + 1), n, p)
    top = np.max(logs)
    if not np.isfinite(top):
        return 0.0
    total = math.exp(top) * math.fsum(np.exp(logs - top))
    return min(max(total, 0.0), 1.0)


def weak_law_sample_size(p: float, eps: float, tolerance: float) -> int:
    '''
    smallest N with chebyshev_frequency_bound(p, eps, N) <= tolerance
    '''
    assert tolerance > 0, 'tolerance must be positive.'
    n = max(1, math.ceil(p * (1 - p) / (eps ** 2 * tolerance) - 1e-9))
    while chebyshev_frequency_bound(p, eps, n) > tolerance * (1 + 1e-12):
        n += 1
    return n


@dataclass(frozen=True)
class MetaTrialReport:
    p: float
    eps: float
    n: int
    trials: int
    outside: int      # meta-trials with |k/N - p| > eps
    chebyshev: float

    @property
    def fraction(self) -> float:
        return self.outside / self.trials


def frequency_meta_trials(p: float, eps: float, n: int, trials: int, seed: int,
                          chunk_size: int = 1000) -> MetaTrialReport:
    '''
    Monte Carlo check of the weak law: `trials` independent runs of N
    Bernoulli(p) trials, counting those whose frequency misses p by more than eps.
    Chunk c draws from stream (seed, c), so the result does not depend on chunking order.
    '''
    assert trials >= 1, 'trials must be positive.'
    outside = 0
    for c, sl in chunk_slices(trials, chunk_size):
        rng = make_rng(seed, META_TRIAL_STREAM, c)
        k = rng.binomial(n, p, size=sl.stop - sl.start)
        outside += int(np.sum(np.abs(k / n - p) > eps))
    report = MetaTrialReport(p, eps, n, trials, outside, chebyshev_frequency_bound(p, eps, n))
    logger.debug(f'meta-trials: {outside}/{trials} outside, Chebyshev bound {report.chebyshev:.3e}')
    return report
