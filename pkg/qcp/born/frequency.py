#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from qcp.classical import (FiniteProbabilitySpace,
                           exact_frequency_event,
                           frequency_window)
from qcp.hilbert import (ModeSpace,
                         Region)
from qcp.squant import (MAX_DIMENSION,
                        QuantumProcess,
                        SSet,
                        power)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)


def ensemble_frequency_weight(qp: QuantumProcess, n: int, t: float, region: Region, eps: float) -> float:
    '''
    ||Psi^N[(t, Delta_{N,eps})]||^2 for the N-fold product process. The
    product weight equals P_t^N, so the sum is a binomial tail in
    p = ||Psi_hat((t, region))||^2 and no product state is built.
    '''
    p = qp.weight(SSet(t, region))
    return exact_frequency_event(p, eps, n)


def _count_array(mask: np.ndarray, n: int) -> np.ndarray:
    '''
    number of factors inside the region for every flat index of the n-fold product
    '''
    ones = mask.astype(np.int64)
    counts = ones
    for _ in range(n - 1):
        counts = np.add.outer(counts, ones).ravel()
    return counts


def materialized_frequency_weight(qp: QuantumProcess,
                                  n: int,
                                  t: float,
                                  region: Region,
                                  eps: float,
                                  max_dimension: int = MAX_DIMENSION) -> float:
    '''
    The same weight through the explicit d^N-dimensional product process;
    only small mode processes fit.
    '''
    assert isinstance(qp.space, ModeSpace), 'materialized products need a mode process.'
    big = power(qp, n, max_dimension)
    p = qp.weight(SSet(t, region))
    lo, hi = frequency_window(p, eps, n)
    counts = _count_array(region.mask, n)
    event = Region(big.space, (counts >= lo) & (counts <= hi))
    return big.weight(SSet(t, event))


def born_rule_frequency_weight(p: float, n: int, eps: float) -> float:
    '''
    The frequency event evaluated on the classical product space of N
    Bernoulli(p) position readings.
    '''
    space = FiniteProbabilitySpace.bernoulli(p).power(n)
    lo, hi = frequency_window(p, eps, n)
    event = space.event_where(lambda o: lo <= sum(o if n > 1 else (o,)) <= hi)
    return space.probability(event)
