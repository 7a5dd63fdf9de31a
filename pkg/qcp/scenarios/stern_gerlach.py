#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import List

from qcp.born import (READY,
                      build_povm,
                      spin_model)
from qcp.hilbert import (ModeNetwork,
                         Region,
                         WaveFunction)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_most,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure


def spin_state(theta: float) -> np.ndarray:
    return np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=np.complex128)


class SternGerlach(Scenario):
    '''
    The spin (cos theta/2, sin theta/2) passes an apparatus tilted by
    axis_angle; after one tick the pointer shows '+' or '-'.
    '''
    figure = 'Sec. 8'

    def build(self) -> ScenarioSetup:
        tick = float(self.config.tick)
        model = spin_model(float(self.config.axis_angle))
        phi = spin_state(float(self.config.theta))
        space = model.lab
        net = ModeNetwork(space, tick).unitary(1, model.coupling, name='stern_gerlach')
        psi = WaveFunction(space, np.kron(phi, model.ready.amplitudes))
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, tick), name='stern_gerlach')

        def pointer(value):
            return Region.from_predicate(space, lambda l: l[1] == value)
        ssets = {'ready': SSet(0.0, pointer(READY)), 'plus': SSet(tick, pointer('+')), 'minus': SSet(tick, pointer('-'))}
        full = Region.full(space)
        tree = TreeStructure([0.0, tick], [[full, pointer('+')], [full, pointer('-')]])
        return ScenarioSetup(qp, [0.0, tick], ssets, tree=tree, model=model, micro_state=phi)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        theta, alpha = float(self.config.theta), float(self.config.axis_angle)
        plus = spin_state(alpha)
        minus = np.array([-np.sin(alpha / 2), np.cos(alpha / 2)], dtype=np.complex128)
        povm = build_povm(setup.model, seed=self.seed)
        projector_gap = max(np.max(np.abs(povm.operator(['+']) - np.outer(plus, plus.conj()))),
                            np.max(np.abs(povm.operator(['-']) - np.outer(minus, minus.conj()))))
        return [at_most('povm.spin_projectors', projector_gap, 1e-12),
                near('branches.plus', self.weight('plus'), np.cos((theta - alpha) / 2) ** 2, 1e-12),
                near('branches.minus', self.weight('minus'), np.sin((theta - alpha) / 2) ** 2, 1e-12)]
