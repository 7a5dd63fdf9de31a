#!/usr/bin/env python3
# encoding: utf-8

import itertools
import numpy as np

from typing import (List,
                    Tuple)

from qcp.born import (READY,
                      spin_model)
from qcp.hilbert import (ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure

SPIN = ['up', 'down']
POINTER = [READY, '+', '-']
# factor order of the lab space
SPIN_A, SPIN_B, SET_A, SET_B, PTR_A, PTR_B = range(6)


def singlet_probability(outcome_a: str, outcome_b: str, theta_a: float, theta_b: float) -> float:
    '''
    equal outcomes: sin^2((theta_a - theta_b)/2) / 2; opposite: cos^2(...) / 2
    '''
    half = (theta_a - theta_b) / 2
    return 0.5 * (np.sin(half) ** 2 if outcome_a == outcome_b else np.cos(half) ** 2)


def setting_controlled(angles) -> np.ndarray:
    '''
    sum_s |s><s| (x) U(angle_s) on (setting, spin, pointer)
    '''
    blocks = [spin_model(a).coupling for a in angles]
    d = blocks[0].shape[0]
    out = np.zeros((len(blocks) * d, len(blocks) * d), dtype=np.complex128)
    for s, u in enumerate(blocks):
        out[s * d:(s + 1) * d, s * d:(s + 1) * d] = u
    return out


class Epr(Scenario):
    '''
    A singlet shared by two Stern-Gerlach apparatuses whose orientations are
    chosen by independent registers; after one tick the lab carries one
    branch per (setting pair, outcome pair).
    '''
    figure = 'Sec. 8'

    def _settings(self) -> Tuple[List[str], List[str]]:
        return ([f'a{i}' for i in range(len(self.config.angles_a))],
                [f'b{i}' for i in range(len(self.config.angles_b))])

    def build(self) -> ScenarioSetup:
        c = self.config
        tick = float(c.tick)
        sets_a, sets_b = self._settings()
        assert len(sets_a) == len(sets_b) == 2, 'each apparatus has two orientations.'
        factors = [ModeSpace(SPIN), ModeSpace(SPIN), ModeSpace(sets_a), ModeSpace(sets_b),
                   ModeSpace(POINTER), ModeSpace(POINTER)]
        space = factors[0]
        for f in factors[1:]:
            space = ModeSpace.product(space, f)

        qa, qb = float(c.setting_a_probability), float(c.setting_b_probability)
        singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
        ready = np.array([1.0, 0.0, 0.0])
        amplitudes = singlet
        for part in (np.sqrt([qa, 1 - qa]), np.sqrt([qb, 1 - qb]), ready, ready):
            amplitudes = np.kron(amplitudes, part)
        net = ModeNetwork(space, tick)
        net.local(1, [SET_A, SPIN_A, PTR_A], setting_controlled(c.angles_a), name='apparatus_a')
        net.local(1, [SET_B, SPIN_B, PTR_B], setting_controlled(c.angles_b), name='apparatus_b')
        qp = QuantumProcess(space, net.propagator(), WaveFunction(space, amplitudes), (0.0, tick), name='epr')

        full = Region.full(space)
        ssets, branches = {}, []
        self.expected = {}
        for (i, sa), (j, sb), oa, ob in itertools.product(enumerate(sets_a), enumerate(sets_b), '+-', '+-'):
            region = Region.from_predicate(
                space, lambda l, sa=sa, sb=sb, oa=oa, ob=ob: l[SET_A] == sa and l[SET_B] == sb and l[PTR_A] == oa and l[PTR_B] == ob)
            name = f'{sa}{sb}{oa}{ob}'
            ssets[name] = SSet(tick, region)
            branches.append([full, region])
            setting = (qa if i == 0 else 1 - qa) * (qb if j == 0 else 1 - qb)
            self.expected[name] = setting * singlet_probability(oa, ob, c.angles_a[i], c.angles_b[j])
        return ScenarioSetup(qp, [0.0, tick], ssets, tree=TreeStructure([0.0, tick], branches))

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        weights = {name: self.weight(name) for name in setup.ssets}
        nonzero = sum(w > 1e-12 for w in weights.values())
        out = [near('branches.nonzero', nonzero, 16, 0),
               near('branches.total_weight', sum(weights.values()), 1.0, 1e-12)]
        out.extend(near(f'branches.{name}', weights[name], self.expected[name], 1e-12) for name in sorted(weights))
        return out
