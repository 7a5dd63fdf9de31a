#!/usr/bin/env python3
# encoding: utf-8

from typing import List

from qcp.hilbert import (ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_least,
                                at_most,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure

MODES = ['src', 'armR', 'armT', 'detR', 'detT']


class BeamSplitter(Scenario):
    '''
    tick 1: the splitter sends the particle into arm R (reflected) or arm T;
    tick 2: each arm ends in its detector.
    '''
    figure = 'Fig. 2'

    def build(self) -> ScenarioSetup:
        tick = float(self.config.tick)
        space = ModeSpace(MODES)
        net = ModeNetwork(space, tick)
        net.beam_splitter(1, 'src', 'armR', float(self.config.transmissivity), name='BS')
        net.route(1, ['src'], ['armT'], name='transmit')
        net.route(2, ['armR', 'armT'], ['detR', 'detT'], name='detect')
        psi = WaveFunction.from_labels(space, {'src': 1.0})
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, 2 * tick), name='beam_splitter')

        def r(*labels):
            return Region.from_labels(space, labels)
        grid = [0.0, tick, 2 * tick]
        ssets = {'source': SSet(0.0, r('src')),
                 'armR': SSet(tick, r('armR')), 'armT': SSet(tick, r('armT')),
                 'detR': SSet(2 * tick, r('detR')), 'detT': SSet(2 * tick, r('detT'))}
        full = Region.full(space)
        tree = TreeStructure(grid, [[full, r('armR'), r('detR')], [full, r('armT'), r('detT')]])
        return ScenarioSetup(qp, grid, ssets, tree=tree)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        t = float(self.config.transmissivity)
        return [near('arms.weight_R', self.weight('armR'), 1 - t, 1e-12),
                near('arms.weight_T', self.weight('armT'), t, 1e-12),
                at_least('detect.m_psi_armR_detR', self.m('armR', 'detR'), 1 - 1e-10),
                at_least('detect.m_psi_armT_detT', self.m('armT', 'detT'), 1 - 1e-10),
                at_most('detect.m_psi_armR_detT', abs(self.m('armR', 'detT')), 1e-10)]
