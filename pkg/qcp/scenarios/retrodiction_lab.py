#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import List

from qcp.hilbert import (ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_least,
                                at_most)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure

PARTICLE = ['src', 'toR', 'toT', 'gone']
DETECTOR = ['ready', 'fired', 'record']
TRIGGERED = ('fired', 'record')


def absorption(particle_mode: str) -> np.ndarray:
    '''
    swap |mode, ready> <-> |gone, fired> on (particle, detector)
    '''
    d = len(DETECTOR)
    a = PARTICLE.index(particle_mode) * d + DETECTOR.index('ready')
    b = PARTICLE.index('gone') * d + DETECTOR.index('fired')
    op = np.eye(len(PARTICLE) * d, dtype=np.complex128)
    op[[a, b]] = op[[b, a]]
    return op


class RetrodictionLab(Scenario):
    '''
    phi (x) Phi_R (x) Phi_T -> (phi_R + phi_T) (x) Phi_R (x) Phi_T at t_1
    -> Phi*_R (x) Phi_T + Phi_R (x) Phi*_T at t_2, after which the triggered
    detector settles into a permanent record.
    '''
    figure = 'Sec. 9'

    def build(self) -> ScenarioSetup:
        tick = float(self.config.tick)
        space = ModeSpace.product(ModeSpace.product(ModeSpace(PARTICLE), ModeSpace(DETECTOR)), ModeSpace(DETECTOR))
        net = ModeNetwork(space, tick)
        net.beam_splitter(1, 'src', 'toR', float(self.config.transmissivity), axis=0, name='BS')
        net.route(1, ['src'], ['toT'], axis=0, name='transmit')
        net.local(2, [0, 1], absorption('toR'), name='absorb_R')
        net.local(2, [0, 2], absorption('toT'), name='absorb_T')
        net.route(3, ['fired'], ['record'], axis=1, name='record_R')
        net.route(3, ['fired'], ['record'], axis=2, name='record_T')
        psi = WaveFunction.from_labels(space, {('src', 'ready', 'ready'): 1.0})
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, 4 * tick), name='retrodiction_lab')

        def where(pred):
            return Region.from_predicate(space, lambda l: bool(pred(*l)))
        r_trig = where(lambda p, r, t: r in TRIGGERED)
        t_trig = where(lambda p, r, t: t in TRIGGERED)
        grid = [k * tick for k in range(5)]
        ssets = {'toR@1': SSet(tick, where(lambda p, r, t: p == 'toR' and r == t == 'ready')),
                 'toT@1': SSet(tick, where(lambda p, r, t: p == 'toT' and r == t == 'ready'))}
        for k in (2, 3, 4):
            ssets[f'R_triggered@{k}'] = SSet(k * tick, r_trig)
            ssets[f'T_triggered@{k}'] = SSet(k * tick, t_trig)

        full = Region.full(space)
        only_r = where(lambda p, r, t: r in TRIGGERED and t == 'ready')
        only_t = where(lambda p, r, t: t in TRIGGERED and r == 'ready')
        tree = TreeStructure(grid, [[full, ssets['toR@1'].region] + [only_r] * 3,
                                    [full, ssets['toT@1'].region] + [only_t] * 3])
        return ScenarioSetup(qp, grid, ssets, tree=tree)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        out = []
        for side in 'RT':
            weights = [self.weight(f'{side}_triggered@{k}') for k in (2, 3, 4)]
            out += [at_least(f'record.{side}_final_vs_t2', self.m(f'{side}_triggered@4', f'{side}_triggered@2'), 1 - 1e-10),
                    at_least(f'record.{side}_final_vs_t1', self.m(f'{side}_triggered@4', f'to{side}@1'), 1 - 1e-10),
                    at_most(f'record.{side}_weight_drift', max(weights) - min(weights), 1e-12)]
        return out
