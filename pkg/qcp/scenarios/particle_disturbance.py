#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import List

from qcp.hilbert import (ModeSpace,
                         Region,
                         WaveFunction)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                near)
from qcp.scenarios.mach_zehnder import (MODES,
                                        SHUTTER,
                                        interferometer,
                                        mode_region)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure

TEST = ['free', 'kicked']


def kick(strength: float) -> np.ndarray:
    c, s = np.cos(strength), np.sin(strength)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def expected_detectors(strength: float, phase: float) -> List[float]:
    '''
    (D1, D2) once the lower path has rotated the test particle by `strength`
    '''
    d1 = (1 - np.cos(phase) * np.cos(strength)) / 2
    return [d1, 1 - d1]


class ParticleDisturbance(Scenario):
    '''
    Open interferometer with a test particle next to the lower path. The
    particle passing below kicks it; a full kick leaves a which-path record
    and the interference at the detectors disappears.
    '''
    figure = 'Sec. 9'

    @property
    def strength(self) -> float:
        return float(self.config.strength) if bool(self.config.coupling) else 0.0

    def build(self) -> ScenarioSetup:
        tick, phase = float(self.config.tick), float(self.config.hwp_phase)
        space = ModeSpace.product(ModeSpace.product(ModeSpace(SHUTTER), ModeSpace(MODES)), ModeSpace(TEST))
        net = interferometer(space, tick, phase)
        if bool(self.config.coupling):
            net.controlled(2, 1, 'low', 2, kick(float(self.config.strength)), name='kick')
        psi = WaveFunction.from_labels(space, {('open', 'src', 'free'): 1.0})
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, 3 * tick), name='test_particle_disturbance')

        def test(state):
            return Region.from_predicate(space, lambda l: l[2] == state)
        grid = [k * tick for k in range(4)]
        ssets = {'up@2': SSet(2 * tick, mode_region(space, ['up'])),
                 'low@2': SSet(2 * tick, mode_region(space, ['low'])),
                 'D1': SSet(3 * tick, mode_region(space, ['D1'])),
                 'D2': SSet(3 * tick, mode_region(space, ['D2'])),
                 'kicked@2': SSet(2 * tick, test('kicked')),
                 'kicked@3': SSet(3 * tick, test('kicked'))}
        tree = None
        if bool(self.config.coupling):
            full = Region.full(space)
            tree = TreeStructure(grid, [[full, full, test('free'), test('free')],
                                        [full, full, test('kicked'), test('kicked')]])
        return ScenarioSetup(qp, grid, ssets, tree=tree)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        d1, d2 = expected_detectors(self.strength, float(self.config.hwp_phase))
        kicked = np.sin(self.strength) ** 2 / 2
        return [near('detect.D1', self.weight('D1'), d1, 1e-10),
                near('detect.D2', self.weight('D2'), d2, 1e-10),
                near('record.kicked_weight', self.weight('kicked@2'), kicked, 1e-12),
                near('record.kicked_stable', self.weight('kicked@3'), kicked, 1e-12)]
