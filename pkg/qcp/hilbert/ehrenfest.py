#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from dataclasses import dataclass
from typing import Sequence

from qcp.common.exceptions import (SpaceMismatch,
                                   TooFewSnapshots)
from qcp.hilbert.propagators import SplitOperatorPropagator
from qcp.hilbert.spaces import GridSpace
from qcp.hilbert.wavefunction import WaveFunction


@dataclass(frozen=True)
class EhrenfestReport:
    times: np.ndarray
    q_mean: np.ndarray    # (snapshots, dimension)
    p_mean: np.ndarray
    force_mean: np.ndarray  # <grad V>
    r1: np.ndarray        # d<Q>/dt - <P>/m at interior snapshots
    r2: np.ndarray        # d<P>/dt + <grad V>
    tolerance: float

    @property
    def max_residual(self) -> float:
        return float(max(np.max(np.abs(self.r1)), np.max(np.abs(self.r2))))

    @property
    def flagged(self) -> bool:
        return self.max_residual > self.tolerance


def ehrenfest_diagnostics(trajectory: Sequence[WaveFunction],
                          prop: SplitOperatorPropagator,
                          tolerance: float = 1e-4) -> EhrenfestReport:
    '''
    Check d<Q>/dt = <P>/m and d<P>/dt = -<grad V> along sampled snapshots
    with centered differences.
    params:
        trajectory: at least three snapshots at uniform time spacing
        prop: the grid propagator that produced them (mass and potential)
    '''
    if len(trajectory) < 3:
        raise TooFewSnapshots(f'need at least 3 snapshots, got {len(trajectory)}')
    space = trajectory[0].space
    if not isinstance(space, GridSpace) or prop.space != space:
        raise SpaceMismatch('Ehrenfest diagnostics need grid snapshots on the propagator grid.')
    times = np.array([psi.time for psi in trajectory])
    steps = np.diff(times)
    h = steps.mean()
    assert h > 0 and np.allclose(steps, h, rtol=1e-9, atol=1e-12), 'snapshots must be uniformly spaced in time.'

    q = np.array([psi.position_mean() for psi in trajectory])
    p = np.array([psi.momentum_mean() for psi in trajectory])
    force = np.array([[np.dot(g, psi.density) / psi.norm_squared for g in prop.potential_gradient(psi.time)]
                      for psi in trajectory])
    r1 = (q[2:] - q[:-2]) / (2 * h) - p[1:-1] / prop.mass
    r2 = (p[2:] - p[:-2]) / (2 * h) + force[1:-1]
    return EhrenfestReport(times, q, p, force, r1, r2, tolerance)
