#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Iterable,
                    List,
                    Optional,
                    Tuple)

from qcp.common.exceptions import ConfigError
from qcp.hilbert import (ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.hilbert.network import route_matrix
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_most,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import TreeStructure

MODES = ['src', 'up', 'low', 'abs', 'D1', 'D2']
SHUTTER = ['open', 'closed']


def shutter_probability(shutter: str, q: float) -> float:
    if shutter == 'open':
        return 1.0
    if shutter == 'closed':
        return 0.0
    if shutter == 'random':
        assert 0 <= q <= 1, f'shutter_open_probability must lie in [0, 1], got {q}.'
        return float(q)
    raise ConfigError(f'shutter must be open, closed or random, got {shutter!r}')


def interferometer(space: ModeSpace, tick: float, hwp_phase: float, axis: int = 1) -> ModeNetwork:
    '''
    Particle modes on factor `axis`, the shutter register on factor 0.
        tick 1: src enters the upper input of BS1
        tick 2: phase plate on the upper path; a closed shutter moves the lower path into `abs`
        tick 3: BS2, then the outputs reach D1 (upper port) and D2
    '''
    net = ModeNetwork(space, tick)
    net.route(1, ['src'], ['up'], axis=axis, name='source')
    net.beam_splitter(1, 'up', 'low', axis=axis, name='BS1')
    net.phase(2, 'up', hwp_phase, axis=axis, name='HWP')
    net.controlled(2, 0, 'closed', axis, route_matrix(space.factors[axis], ['low'], ['abs']), name='shutter')
    net.beam_splitter(3, 'up', 'low', axis=axis, name='BS2')
    net.route(3, ['up', 'low'], ['D1', 'D2'], axis=axis, name='detectors')
    return net


def mode_region(space: ModeSpace, modes: Iterable[str], shutter: Optional[Iterable[str]] = None, axis: int = 1) -> Region:
    modes = set(modes)
    shutter = set(SHUTTER) if shutter is None else set(shutter)
    return Region.from_predicate(space, lambda l: l[0] in shutter and l[axis] in modes)


def expected_weights(q: float, phase: float) -> Tuple[float, float, float]:
    '''
    closed-form (D1, D2, absorbed)
    '''
    return (q * (1 - np.cos(phase)) / 2 + (1 - q) / 4,
            q * (1 + np.cos(phase)) / 2 + (1 - q) / 4,
            (1 - q) / 2)


class MachZehnder(Scenario):
    '''
    Shutter open: interference leaves D1 dark. Shutter closed: the upper path
    alone reaches BS2. Shutter random: a register in superposition sets the
    shutter and the process carries four branches.
    '''
    figure = 'Fig. 3'

    @property
    def q(self) -> float:
        return shutter_probability(str(self.config.shutter), float(self.config.shutter_open_probability))

    def build(self) -> ScenarioSetup:
        tick, phase, q = float(self.config.tick), float(self.config.hwp_phase), self.q
        space = ModeSpace.product(ModeSpace(SHUTTER), ModeSpace(MODES))
        net = interferometer(space, tick, phase)
        register = np.array([np.sqrt(q), np.sqrt(1 - q)])
        source = np.zeros(len(MODES))
        source[0] = 1.0
        psi = WaveFunction(space, np.kron(register, source))
        qp = QuantumProcess(space, net.propagator(), psi, (0.0, 3 * tick), name='mach_zehnder')

        def r(modes, shutter=None):
            return mode_region(space, modes, shutter)
        grid = [k * tick for k in range(4)]
        ssets = {'up@1': SSet(tick, r(['up'])), 'low@1': SSet(tick, r(['low'])),
                 'up@2': SSet(2 * tick, r(['up'])), 'low@2': SSet(2 * tick, r(['low'])),
                 'abs@2': SSet(2 * tick, r(['abs'])),
                 'D1': SSet(3 * tick, r(['D1'])), 'D2': SSet(3 * tick, r(['D2'])),
                 'absorbed': SSet(3 * tick, r(['abs']))}
        for state in SHUTTER:
            for mode in ('D1', 'D2', 'abs'):
                ssets[f'{state}_{mode}'] = SSet(3 * tick, r([mode], [state]))

        full = Region.full(space)
        branches = []
        if q > 0:
            paths = r(['up', 'low'], ['open'])
            branches.append([full, paths, paths, r(['D1', 'D2'], ['open'])])
        if q < 1:
            paths = r(['up', 'low'], ['closed'])
            upper = r(['up'], ['closed'])
            branches.append([full, paths, upper, r(['D1'], ['closed'])])
            branches.append([full, paths, upper, r(['D2'], ['closed'])])
            branches.append([full, paths, r(['abs'], ['closed']), r(['abs'], ['closed'])])
        return ScenarioSetup(qp, grid, ssets, tree=TreeStructure(grid, branches))

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        q, phase = self.q, float(self.config.hwp_phase)
        d1, d2, absorbed = expected_weights(q, phase)
        out = [near('paths.upper_weight', self.weight('up@1'), 0.5, 1e-12),
               near('paths.lower_weight', self.weight('low@1'), 0.5, 1e-12),
               near('detect.D1', self.weight('D1'), d1, 1e-10),
               near('detect.D2', self.weight('D2'), d2, 1e-10),
               near('detect.absorbed', self.weight('absorbed'), absorbed, 1e-10)]
        if q > 0 and np.isclose(np.cos(phase), 1.0, rtol=0, atol=1e-15):
            out.append(at_most('dark.open_and_D1', self.weight('open_D1'), 1e-10))
        if 0 < q < 1:
            weights = setup.tree.branch_weights(setup.process)[:, -1]
            for name, value, target in zip(['open', 'closed_D1', 'closed_D2', 'closed_abs'], weights,
                                           [q, (1 - q) / 4, (1 - q) / 4, (1 - q) / 2]):
                out.append(near(f'branches.{name}', value, target, 1e-10))
        return out
