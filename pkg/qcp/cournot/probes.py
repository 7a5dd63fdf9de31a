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
                                   MalformedCandidate,
                                   VanishingWeight)
from qcp.cournot.functional import (DEFAULT_THRESHOLD,
                                    VANISHING,
                                    m_psi)
from qcp.hilbert import (GridSpace,
                         Region,
                         evolve,
                         project)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.utils.np_utils import (norm_squared,
                                real_overlap)
from qcp.utils.sundry_utils import make_rng
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

# min(M(S, S1), M(S, S2)) never exceeds this for disjoint equal-time S1, S2
DISJOINT_BOUND = 1 / np.sqrt(2)
SCAN_STREAM = 7


@dataclass(frozen=True)
class ProbeRecord:
    s1: SSet
    s2: SSet
    m1: float
    m2: float
    overlap: float  # Re<psi_hat(S1)|psi_hat(S2)>


@dataclass
class ConsistencyReport:
    threshold: float
    checked: int = 0
    anchored: int = 0
    forced: int = 0
    max_min_m: float = 0.0
    violations: List[ProbeRecord] = field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return self.max_min_m <= DISJOINT_BOUND + 1e-12

    @property
    def passed(self) -> bool:
        return not self.violations and self.bound_holds


def _safe_m(qp, s1, s2) -> float:
    try:
        return m_psi(qp, s1, s2)
    except BothWeightsVanish:
        return 0.0


def _check_candidate(qp: QuantumProcess, s1: SSet, s2: SSet):
    if abs(s1.time - s2.time) > 1e-12:
        raise MalformedCandidate(f'candidate times differ: {s1.time} vs {s2.time}')
    if s1.region.space != qp.space or s2.region.space != qp.space:
        raise MalformedCandidate('candidate regions live on another space.')
    if not s1.region.is_disjoint(s2.region):
        raise MalformedCandidate(f'candidate regions overlap: {s1.describe()} and {s2.describe()}')


def consistency_probe(qp: QuantumProcess,
                      s: SSet,
                      candidates: Sequence[Tuple[SSet, SSet]],
                      threshold: float = DEFAULT_THRESHOLD,
                      report: Optional[ConsistencyReport] = None) -> ConsistencyReport:
    '''
    Disjoint equal-time S1, S2 are anchored to S when both M(S, S_i) >= 1 - threshold.
    An anchored pair whose distances |psi_hat(S) - psi_hat(S_i)| force
    Re<psi_hat(S1)|psi_hat(S2)> > 0 (`forced`) yet shows no positive overlap
    is a violation. Disjoint equal-time values are orthogonal, so a forced pair
    can never occur; anchoring both is impossible below threshold
    1 - 1/sqrt(2), which the report tracks as `max_min_m`. Looser thresholds
    anchor pairs without forcing them.
    '''
    report = report or ConsistencyReport(threshold)
    for s1, s2 in candidates:
        _check_candidate(qp, s1, s2)
        m1, m2 = _safe_m(qp, s, s1), _safe_m(qp, s, s2)
        report.checked += 1
        report.max_min_m = max(report.max_min_m, min(m1, m2))
        if m1 >= 1 - threshold and m2 >= 1 - threshold:
            report.anchored += 1
            a, a1, a2 = (qp.psi_hat(x).amplitudes for x in (s, s1, s2))
            d1, d2 = np.sqrt(norm_squared(a - a1)), np.sqrt(norm_squared(a - a2))
            if (d1 + d2) ** 2 >= norm_squared(a1) + norm_squared(a2) - 1e-12:
                continue
            # Re<1|2> >= (|1|^2 + |2|^2 - (d1 + d2)^2) / 2 > 0 from here on
            report.forced += 1
            overlap = real_overlap(a1, a2)
            if overlap <= 0:
                report.violations.append(ProbeRecord(s1, s2, m1, m2, overlap))
    return report


def _random_cells(space, rng) -> Tuple[Region, Region]:
    if isinstance(space, GridSpace):
        # two contiguous blocks of the flat grid: [i, j) and its complement
        i, j = np.sort(rng.choice(space.size + 1, 2, replace=False))
        first = Region.from_runs(space, [(i, j)])
        return first, ~first
    cells = rng.integers(0, 3, space.size)
    return Region(space, cells == 0), Region(space, cells == 1)


def consistency_scan(qp: QuantumProcess,
                     time_grid: Sequence[float],
                     n_pairs: int = 1000,
                     threshold: float = DEFAULT_THRESHOLD,
                     seed: int = 0) -> ConsistencyReport:
    '''
    Randomized consistency probe: every draw picks a candidate time and two
    disjoint cells there, plus an anchor that is either their union at
    another grid time or a random cell.
    '''
    rng = make_rng(seed, SCAN_STREAM)
    report = ConsistencyReport(threshold)
    for n in range(n_pairs):
        t = float(rng.choice(time_grid))
        r1, r2 = _random_cells(qp.space, rng)
        ta = float(rng.choice(time_grid))
        anchor = r1 | r2 if n % 2 == 0 else _random_cells(qp.space, rng)[0]
        consistency_probe(qp, SSet(ta, anchor), [(SSet(t, r1), SSet(t, r2))], threshold, report)
    logger.debug(f'consistency scan: {report.checked} pairs, {report.anchored} anchored, '
                 f'max min(M) = {report.max_min_m:.6f}')
    return report


def _weight_of(qp: QuantumProcess, s: SSet) -> float:
    w = norm_squared(qp.psi_hat(s).amplitudes)
    if w <= VANISHING:
        raise VanishingWeight(f'|psi_hat{s.describe()}|^2 = {w:.3e}')
    return w


def fac_ratio(qp: QuantumProcess, s1: SSet, s2: SSet) -> float:
    '''
    Re<psi_hat(S1)|psi_hat(S2)> / |psi_hat(S2)|^2
    '''
    w2 = _weight_of(qp, s2)
    return real_overlap(qp.psi_hat(s1).amplitudes, qp.psi_hat(s2).amplitudes) / w2


def complement_overlap(qp: QuantumProcess, s1: SSet, s2: SSet) -> float:
    '''
    Re<psi_hat(S1^c)|psi_hat(S2)> / |psi_hat(S2)|^2, equal to 1 - fac_ratio(S1, S2)
    '''
    return fac_ratio(qp, s1.complement(), s2)


def j_residual(qp: QuantumProcess, s1: SSet, s2: SSet) -> float:
    '''
    |E2 Psi(t2) - E2 U(t2 - t1) E1 Psi(t1)| / |E2 Psi(t2)|, evaluated at t2
    '''
    target = project(qp.state_at(s2.time), s2.region)
    w = norm_squared(target.amplitudes)
    if w <= VANISHING:
        raise VanishingWeight(f'|E Psi(t)|^2 = {w:.3e} for {s2.describe()}')
    carried = evolve(project(qp.state_at(s1.time), s1.region), qp.propagator, s2.time - s1.time)
    carried = project(carried, s2.region)
    return float(np.sqrt(norm_squared(target.amplitudes - carried.amplitudes) / w))


def support_condition(qp: QuantumProcess, s1: SSet, s2: SSet) -> Tuple[float, float]:
    '''
    U(t2 - t1) E1 Psi(t1) = E2 Psi(t2) as relative residuals
    |psi_hat(S1) - psi_hat(S2)| / |psi_hat(S2)| and / |psi_hat(S1)|.
    '''
    a, b = qp.psi_hat(s1).amplitudes, qp.psi_hat(s2).amplitudes
    diff = np.sqrt(norm_squared(a - b))
    w1, w2 = norm_squared(a), norm_squared(b)
    if min(w1, w2) <= VANISHING:
        raise VanishingWeight(f'weights {w1:.3e}, {w2:.3e}')
    return float(diff / np.sqrt(w2)), float(diff / np.sqrt(w1))
