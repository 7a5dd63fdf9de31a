#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Any,
                    Dict,
                    List,
                    Sequence,
                    Tuple)

from qcp.common.decorator import locked_memo
from qcp.common.exceptions import (NotAPartition,
                                   TimeOutsideInterval)
from qcp.hilbert import (Propagator,
                         Region,
                         WaveFunction,
                         evolve,
                         project)
from qcp.hilbert.spaces import Space
from qcp.squant.sset import SSet
from qcp.utils.np_utils import norm_squared
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

TIME_TOLERANCE = 1e-12
PSI_HAT_CACHE = 256


def _time_key(t: float) -> float:
    return round(float(t), 9)


class QuantumProcess(object):
    '''
    (space, propagator, initial state at time 0, interval [t_I, t_F]).
    Realizes psi_hat(S) = U(-t) E(region) U(t) psi_0 on demand. Every value is
    referred to time 0, so inner products between psi_hat values are taken there.
    '''

    def __init__(self,
                 space: Space,
                 propagator: Propagator,
                 initial_state: WaveFunction,
                 interval: Tuple[float, float],
                 name: str = ''):
        t_i, t_f = map(float, interval)
        assert t_i <= 0 <= t_f, f'the interval [{t_i}, {t_f}] must contain the reference time 0.'
        assert initial_state.space == space and propagator.space == space, \
            'state, propagator and process must share one space.'
        assert abs(initial_state.norm_squared - 1) <= 1e-10, \
            f'the initial state must be normalized, got |psi_0|^2 = {initial_state.norm_squared!r}.'
        assert initial_state.time == 0, 'the initial state is given at time 0.'
        self.space = space
        self.propagator = propagator
        self.initial_state = initial_state
        self.interval = (t_i, t_f)
        self.name = name

    def check_time(self, t: float) -> float:
        t_i, t_f = self.interval
        if not t_i - TIME_TOLERANCE <= t <= t_f + TIME_TOLERANCE:
            raise TimeOutsideInterval(f'time {t} is outside [{t_i}, {t_f}]')
        return float(t)

    def sset(self, t: float, region: Region) -> SSet:
        self.check_time(t)
        return SSet(float(t), region)

    @locked_memo(key=_time_key)
    def state_at(self, t: float) -> WaveFunction:
        '''
        Psi(t) = U(t) psi_0, materialized once per time point
        '''
        self.check_time(t)
        logger.debug(f'{self.name or "process"}: evolving snapshot t={t:g}')
        return evolve(self.initial_state, self.propagator, float(t))

    def snapshots(self, times: Sequence[float]) -> List[WaveFunction]:
        return [self.state_at(t) for t in times]

    @locked_memo(key=lambda s: (_time_key(s.time), s.region.key), maxsize=PSI_HAT_CACHE)
    def psi_hat(self, s: SSet) -> WaveFunction:
        projected = project(self.state_at(s.time), s.region)
        if s.time == 0:
            return projected.replace(time=0.0)
        return evolve(projected, self.propagator, -s.time).replace(time=0.0)

    def weight(self, s: SSet) -> float:
        '''
        |psi_hat(S)|^2 = P_t(region), computed from Psi(t) directly
        '''
        psi = self.state_at(s.time)
        return norm_squared(psi.amplitudes[s.region.mask])

    def describe(self) -> Dict[str, Any]:
        return dict(name=self.name,
                    space=self.space.describe(),
                    propagator=self.propagator.kind,
                    interval=list(self.interval))

    def __repr__(self):
        return f'QuantumProcess({self.name or self.space!r}, interval={self.interval})'


def sigma_additivity_residual(qp: QuantumProcess, t: float, partition: Sequence[Region]) -> float:
    '''
    |psi_hat((t, X)) - sum_k psi_hat((t, region_k))| for a partition of X
    '''
    assert partition, 'a partition needs at least one cell.'
    cover = np.zeros(qp.space.size, dtype=int)
    for r in partition:
        if r.space != qp.space:
            raise NotAPartition(f'cell {r!r} lives on another space.')
        cover += r.mask
    if cover.max() > 1:
        raise NotAPartition(f'cells overlap at {int(np.sum(cover > 1))} points.')
    if cover.min() < 1:
        raise NotAPartition(f'cells leave {int(np.sum(cover < 1))} points uncovered.')
    whole = qp.psi_hat(SSet(t, Region.full(qp.space))).amplitudes
    total = sum(qp.psi_hat(SSet(t, r)).amplitudes for r in partition)
    return float(np.sqrt(norm_squared(whole - total)))
