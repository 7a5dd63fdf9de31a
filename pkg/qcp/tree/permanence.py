#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from dataclasses import dataclass
from typing import (Optional,
                    Sequence,
                    Tuple)

from qcp.common.exceptions import (BothWeightsVanish,
                                   TimeOffGrid,
                                   GridMismatch,
                                   InvalidTree)
from qcp.compat import TrajectoryEnsemble
from qcp.cournot import m_psi_gap
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree.structure import (TreeStructure,
                                validate_tree)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)


@dataclass(frozen=True)
class PermanenceReport:
    support: np.ndarray            # 1 - P_t(support) per grid time
    overlap: float                 # max 1 - M_Psi(Sigma^t_k(s), Sigma^t_k(t_F)) over t <= s and k
    worst: Tuple[float, float, Tuple[int, ...]]  # (t, s, group) attaining `overlap`

    @property
    def support_residual(self) -> float:
        return float(np.max(self.support))

    @property
    def residual(self) -> float:
        return max(self.support_residual, self.overlap)


def permanence_residuals(qp: QuantumProcess, tree: TreeStructure) -> PermanenceReport:
    '''
    Permanence of a tree under the process:
        support: |psi_hat((t, union of branches))|^2 close to 1 at every t
        overlap: the merged branch Sigma^t_k keeps M_Psi close to 1 between
                 any later s and the final time
    '''
    violations = validate_tree(tree)
    if violations:
        raise InvalidTree('; '.join(v.describe() for v in violations[:5]))
    times, last = tree.time_grid, len(tree.time_grid) - 1
    support = np.array([1 - qp.weight(SSet(t, tree.support(k))) for k, t in enumerate(times)])
    overlap, worst = 0.0, (times[0], times[0], ())
    for k, t in enumerate(times):
        for group in tree.partition_at(k).groups:
            final = SSet(times[last], tree.sigma(group, last))
            for s_index in range(k, last + 1):
                try:
                    gap = m_psi_gap(qp, SSet(times[s_index], tree.sigma(group, s_index)), final)
                except BothWeightsVanish:
                    continue
                if gap > overlap:
                    overlap, worst = gap, (t, times[s_index], group)
    logger.debug(f'permanence: support {support.max():.3e}, overlap {overlap:.3e}')
    return PermanenceReport(support, overlap, worst)


@dataclass(frozen=True)
class ResidenceReport:
    y: np.ndarray
    delta: float
    bound: Optional[float]         # 1 - eps from a permanence residual eps

    @property
    def mean(self) -> float:
        return float(self.y.mean())

    @property
    def p_low(self) -> float:
        return float(np.mean(self.y <= 1 - self.delta + 1e-12))


def _tree_index(tree: TreeStructure, t: float) -> int:
    hits = np.flatnonzero(np.isclose(tree.time_grid, t, rtol=0, atol=1e-9))
    if hits.size == 0:
        raise GridMismatch(f'time {t} is not on the tree grid')
    return int(hits[0])


def residence_statistic(ensemble: TrajectoryEnsemble,
                        tree: TreeStructure,
                        times: Sequence[float],
                        delta: float = 1e-3,
                        eps: Optional[float] = None) -> ResidenceReport:
    '''
    Y_t = 1 when a trajectory lies in the same merged branch Sigma^t_k at t
    and at the final time; Y is the average of Y_t over `times`.
    '''
    violations = validate_tree(tree)
    if violations:
        raise InvalidTree('; '.join(v.describe() for v in violations[:5]))
    last = len(tree.time_grid) - 1
    t_final = tree.time_grid[last]
    try:
        final_col = ensemble.time_index(t_final)
    except TimeOffGrid as e:
        raise GridMismatch(f'the ensemble grid lacks the final tree time {t_final}') from e
    end = ensemble.positions[:, final_col]
    ys = []
    for t in times:
        k = _tree_index(tree, t)
        try:
            col = ensemble.time_index(t)
        except TimeOffGrid as e:
            raise GridMismatch(f'time {t} is not on the ensemble grid') from e
        now = ensemble.positions[:, col]
        y_t = np.zeros(ensemble.count, dtype=bool)
        for group in tree.partition_at(k).groups:
            y_t |= tree.sigma(group, k).mask[now] & tree.sigma(group, last).mask[end]
        ys.append(y_t)
    y = np.mean(ys, axis=0)
    return ResidenceReport(y, delta, None if eps is None else 1 - eps)
