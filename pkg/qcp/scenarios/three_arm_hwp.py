#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (List,
                    Sequence,
                    Tuple)

from qcp.cournot import (fac_ratio,
                         j_residual)
from qcp.hilbert import (ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction,
                         complete_isometry,
                         row_completion)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_most,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet)

MODES = ['src', 'arm1', 'arm2', 'arm3', 'D', 'O1', 'O2']
ARMS = ['arm1', 'arm2', 'arm3']


def arm_amplitudes(weights: Sequence[float]) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    assert w.shape == (3,) and np.all(w > 0), f'three positive arm weights are required, got {weights}.'
    return np.sqrt(w / w.sum())


def combiner_row(amplitudes: np.ndarray) -> Tuple[np.ndarray, float]:
    '''
    Detector row of the recombining splitters chosen so that every arm
    contributes the same amplitude c to D before the plate sign:
    row_k * a_k = c for k = 1, 2, 3.
    '''
    inverse = 1 / amplitudes
    c = 1 / np.linalg.norm(inverse)
    return inverse * c, c


class ThreeArmHwp(Scenario):
    '''
    Three arms carry the split wave at t_M = 1 tick; the plate flips the sign
    of arm 2 and the splitters recombine the arms on D at t_F = 2 ticks, so
        E_F Psi(t_F) = E_F U E_1 Psi(t_M) = E_F U E_3 Psi(t_M) = -E_F U E_2 Psi(t_M)
    with arms 1 and 3 disjoint. The arm weights are configurable; the
    recombination row is solved from them.
    '''
    figure = 'Fig. 1'

    def build(self) -> ScenarioSetup:
        tick = float(self.config.tick)
        space = ModeSpace(MODES)
        a = arm_amplitudes(self.config.arm_weights)
        row, self.contribution = combiner_row(a)

        column = np.zeros(space.size, dtype=np.complex128)
        column[[space.index(arm) for arm in ARMS]] = a
        net = ModeNetwork(space, tick)
        net.unitary(1, complete_isometry({space.index('src'): column}, space.size), name='splitters')
        net.phase(2, 'arm2', np.pi, name='HWP')
        net.route(2, ARMS, ['D', 'O1', 'O2'], matrix=row_completion(row), name='recombine')
        psi = WaveFunction.from_labels(space, {'src': 1.0})
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, 2 * tick), name='three_arm_hwp')

        ssets = {arm: SSet(tick, Region.from_labels(space, [arm])) for arm in ARMS}
        ssets['D'] = SSet(2 * tick, Region.from_labels(space, ['D']))
        ssets['source'] = SSet(0.0, Region.from_labels(space, ['src']))
        return ScenarioSetup(qp, [0.0, tick, 2 * tick], ssets)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        qp = setup.process
        s = setup.ssets
        overlap = (s['arm1'].region & s['arm3'].region).count
        return [at_most('chain.j_residual_arm1', j_residual(qp, s['arm1'], s['D']), 1e-6),
                at_most('chain.j_residual_arm3', j_residual(qp, s['arm3'], s['D']), 1e-6),
                at_most('chain.arm1_arm3_common_points', overlap, 0),
                near('chain.fac_ratio_arm2', fac_ratio(qp, s['arm2'], s['D']), -1.0, 1e-6),
                near('chain.detector_weight', qp.weight(s['D']), self.contribution ** 2, 1e-12),
                at_most('irreducible.m_psi_arm1_D', self.m('arm1', 'D'), 0.9),
                at_most('irreducible.m_psi_arm3_D', self.m('arm3', 'D'), 0.9)]
