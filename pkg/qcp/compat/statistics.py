#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from dataclasses import (dataclass,
                         field)
from typing import (List,
                    Optional,
                    Sequence,
                    Tuple)

from qcp.common.exceptions import (BothWeightsVanish,
                                   EmptySSetList)
from qcp.compat.ensemble import TrajectoryEnsemble
from qcp.cournot import m_psi
from qcp.hilbert import Region
from qcp.squant import (QuantumProcess,
                        SSet)


def sampling_band(p: float, count: int) -> float:
    '''
    4-sigma Monte Carlo band of an empirical frequency
    '''
    return 4 * np.sqrt(max(p * (1 - p), 0.0) / count)


def majority_bound(eps: float, delta: float) -> float:
    '''
    P(Y <= 1 - delta) <= eps / delta when every s-set has weight >= 1 - eps
    '''
    assert delta > 0, 'delta must be positive.'
    return eps / delta


def sup_expectation(a: float, p_a: float) -> float:
    '''
    sup E(Y) given P(Y <= a) = P_a: 1 - P_a (1 - a)
    '''
    assert 0 <= a <= 1 and 0 <= p_a <= 1, 'a and P_a must lie in [0, 1].'
    return 1 - p_a * (1 - a)


@dataclass(frozen=True)
class CompatibilityPair:
    s1: SSet
    s2: SSet
    m_psi: float
    m_p: float
    f1: float
    f2: float
    f12: float  # method dependent unless the times coincide

    @property
    def method_dependent(self) -> bool:
        return abs(self.s1.time - self.s2.time) > 1e-12


@dataclass
class CompatibilityReport:
    eps: float
    slack: float
    pairs: List[CompatibilityPair] = field(default_factory=list)
    violations: List[CompatibilityPair] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def compatibility_check(ensemble: TrajectoryEnsemble,
                        qp: QuantumProcess,
                        pairs: Sequence[Tuple[SSet, SSet]],
                        eps: float,
                        slack: Optional[float] = None) -> CompatibilityReport:
    '''
    M_Psi(S1, S2) >= 1 - eps must come with an empirical M_P >= 1 - slack.
    '''
    slack = eps if slack is None else slack
    report = CompatibilityReport(eps, slack)
    for s1, s2 in pairs:
        i1, i2 = ensemble.indicator(s1), ensemble.indicator(s2)
        f1, f2, f12 = float(i1.mean()), float(i2.mean()), float((i1 & i2).mean())
        mp = 2 * f12 / (f1 + f2) if f1 + f2 > 0 else float('nan')
        try:
            m = m_psi(qp, s1, s2)
        except BothWeightsVanish:
            m = float('nan')
        pair = CompatibilityPair(s1, s2, m, mp, f1, f2, f12)
        report.pairs.append(pair)
        if m >= 1 - eps and mp < 1 - slack:
            report.violations.append(pair)
    return report


@dataclass(frozen=True)
class MajorityReport:
    y: np.ndarray
    delta: float
    sets: int

    @property
    def mean(self) -> float:
        return float(self.y.mean())

    @property
    def p_low(self) -> float:
        '''
        P(Y <= 1 - delta)
        '''
        return float(np.mean(self.y <= 1 - self.delta + 1e-12))

    def distribution(self) -> Tuple[np.ndarray, np.ndarray]:
        values, counts = np.unique(self.y, return_counts=True)
        return values, counts / self.y.size


def majority_statistic(ensemble: TrajectoryEnsemble, ssets: Sequence[SSet], delta: float = 1e-3) -> MajorityReport:
    '''
    Y = (1/N) sum_i 1_{S_i} per trajectory
    '''
    if not ssets:
        raise EmptySSetList('the majority statistic needs at least one s-set.')
    y = np.mean([ensemble.indicator(s) for s in ssets], axis=0)
    return MajorityReport(y, delta, len(ssets))


def transition_frequency(ensemble: TrajectoryEnsemble, r1: Region, r2: Region, ever: bool = False) -> float:
    '''
    Mean over consecutive grid steps of the fraction of trajectories moving
    from r1 to r2; with `ever`, the fraction that does so at least once.
    '''
    if ensemble.time_grid.size < 2:
        return 0.0
    inside1 = r1.mask[ensemble.positions[:, :-1]]
    inside2 = r2.mask[ensemble.positions[:, 1:]]
    moves = inside1 & inside2
    if ever:
        return float(np.mean(moves.any(axis=1)))
    return float(np.mean(moves))
