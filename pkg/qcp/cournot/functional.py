#!/usr/bin/env python3
# encoding: utf-8

from dataclasses import dataclass
from typing import Tuple

from qcp.common.exceptions import BothWeightsVanish
from qcp.hilbert import Region
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.utils.np_utils import (norm_squared,
                                real_overlap)

VANISHING = 1e-14
# above this ratio 1 - M is taken from the difference norm
GAP_SWITCH = 0.999
DEFAULT_THRESHOLD = 1e-3


@dataclass(frozen=True)
class CournotVerdict:
    m_value: float
    threshold: float
    holds: bool
    direction: str = 'bidirectional'

    def __post_init__(self):
        assert self.holds == (self.m_value >= 1 - self.threshold), 'holds must follow m >= 1 - threshold.'


@dataclass(frozen=True)
class ParticularCase:
    '''
    S against the whole space at the same time: m = 2w / (1 + w).
    `holds` is the absolute statement w >= 1 - threshold.
    '''
    weight: float
    m_value: float
    threshold: float
    holds: bool


def _pair(qp: QuantumProcess, s1: SSet, s2: SSet):
    a = qp.psi_hat(s1).amplitudes
    b = qp.psi_hat(s2).amplitudes
    w1, w2 = norm_squared(a), norm_squared(b)
    if w1 <= VANISHING and w2 <= VANISHING:
        raise BothWeightsVanish(f'|psi_hat|^2 = {w1:.3e}, {w2:.3e} for {s1.describe()} and {s2.describe()}')
    return a, b, w1, w2


def m_psi_gap(qp: QuantumProcess, s1: SSet, s2: SSet) -> float:
    '''
    1 - M_Psi(S1, S2) = |psi_hat(S1) - psi_hat(S2)|^2 / (|psi_hat(S1)|^2 + |psi_hat(S2)|^2)
    '''
    a, b, w1, w2 = _pair(qp, s1, s2)
    return norm_squared(a - b) / (w1 + w2)


def m_psi(qp: QuantumProcess, s1: SSet, s2: SSet) -> float:
    '''
    M_Psi(S1, S2) = 2 Re<psi_hat(S1)|psi_hat(S2)> / (|psi_hat(S1)|^2 + |psi_hat(S2)|^2).
    Symmetric bit for bit; at most 1.
    '''
    a, b, w1, w2 = _pair(qp, s1, s2)
    ratio = 2 * real_overlap(a, b) / (w1 + w2)
    if ratio > GAP_SWITCH:
        return 1 - norm_squared(a - b) / (w1 + w2)
    return ratio


def difference_norm(qp: QuantumProcess, s1: SSet, s2: SSet) -> Tuple[float, float]:
    '''
    return:
        (|psi_hat(S1) - psi_hat(S2)|^2, |psi_hat(S1)|^2 + |psi_hat(S2)|^2);
        the Cournot condition with tolerance delta reads first <= delta * second
    '''
    a, b, w1, w2 = _pair(qp, s1, s2)
    return norm_squared(a - b), w1 + w2


def cournot_verdict(qp: QuantumProcess, s1: SSet, s2: SSet, threshold: float = DEFAULT_THRESHOLD) -> CournotVerdict:
    m = m_psi(qp, s1, s2)
    return CournotVerdict(m, threshold, m >= 1 - threshold)


def particular_case(qp: QuantumProcess, s: SSet, threshold: float = DEFAULT_THRESHOLD) -> ParticularCase:
    w = qp.weight(s)
    whole = SSet(s.time, Region.full(qp.space))
    m = m_psi(qp, whole, s)
    assert w <= 2 * w / (1 + w) + 1e-12, f'w = {w!r} exceeds 2w/(1+w)'
    return ParticularCase(w, m, threshold, w >= 1 - threshold)
