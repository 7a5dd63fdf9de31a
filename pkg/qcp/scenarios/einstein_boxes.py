#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import List

from qcp.compat import (TrajectoryEnsemble,
                        transition_frequency)
from qcp.hilbert import (DensePropagator,
                         GridSpace,
                         PiecewisePropagator,
                         Region,
                         SplitOperatorPropagator,
                         WaveFunction,
                         dense_grid_hamiltonian,
                         gaussian_packet)
from qcp.scenarios.base import (Assertion,
                                Scenario,
                                ScenarioSetup,
                                at_least,
                                at_most)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.tree import (TreeStructure,
                      extract_tree)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)


def grid_index(grid: List[float], t: float) -> int:
    hits = [k for k, s in enumerate(grid) if abs(s - t) <= 1e-9]
    assert hits, f'time {t} is not on the declared grid.'
    return hits[0]


class EinsteinBoxes(Scenario):
    '''
    One packet at rest in a harmonic trap, prepared with momenta +k and -k:
    it opens into two lobes that reach their turning points a quarter period
    later. At t_b a wall of height `barrier_height` and width `barrier_width`
    is inserted at x = 0, closing each lobe into its own box; without it the
    lobes fall back and pass through each other. Before t_b the trap evolves
    with the split-operator scheme, afterwards with the exact generator
    including the wall. L and R are the two half-lines.
    '''
    figure = 'Sec. 4'
    permanence_tolerance = 1e-6
    independent_control = True

    def build(self) -> ScenarioSetup:
        c = self.config
        space = GridSpace(float(c.extent), int(c.points))
        x = space.coordinates[0]
        omega, k0 = float(c.trap_frequency), float(c.lobe_momentum)
        t_b, t_f, step = float(c.barrier_time), float(c.final_time), float(c.grid_step)
        assert 0 < t_b < t_f, 'the barrier must come inside (0, final_time).'

        trap = 0.5 * omega ** 2 * x ** 2
        wall = trap + float(c.barrier_height) * (np.abs(x) < 0.5 * float(c.barrier_width))
        prop = PiecewisePropagator([
            (0.0, SplitOperatorPropagator(space, step / int(c.substeps), potential=trap)),
            (t_b, DensePropagator(space, hamiltonian=dense_grid_hamiltonian(space, 1.0, wall)))
        ])
        width = 1 / np.sqrt(2 * omega)
        amplitudes = gaussian_packet(space, 0.0, width, k0).amplitudes + gaussian_packet(space, 0.0, width, -k0).amplitudes
        psi = WaveFunction(space, amplitudes).normalize()
        qp = QuantumProcess(space, prop, psi, (0.0, t_f), name='einstein_boxes')

        steps = int(round(t_f / step))
        assert abs(steps * step - t_f) <= 1e-9, 'final_time must be a multiple of grid_step.'
        grid = [k * step for k in range(steps + 1)]
        k_b = grid_index(grid, t_b)

        left = Region.from_predicate(space, lambda x: x < 0)
        right = ~left
        ssets = {}
        for k, t in enumerate(grid):
            ssets[f'L@{k}'] = SSet(t, left)
            ssets[f'R@{k}'] = SSet(t, right)
        full = Region.full(space)
        tree = TreeStructure(grid, [[full] * k_b + [left] * (steps + 1 - k_b),
                                    [full] * k_b + [right] * (steps + 1 - k_b)])
        pairs = tuple((f'{box}@{k}', f'{box}@{steps}') for k in range(k_b, steps) for box in 'LR')
        self.left, self.right, self.barrier_index = left, right, k_b
        return ScenarioSetup(qp, grid, ssets, tree=tree, compat_pairs=pairs)

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        grid, k_b = setup.time_grid, self.barrier_index
        last = len(grid) - 1
        after = range(k_b, last + 1)
        same = min(min(self.m(f'L@{k}', f'L@{last}'), self.m(f'R@{k}', f'R@{last}')) for k in after)
        cross = max(max(abs(self.m(f'L@{k}', f'R@{last}')), abs(self.m(f'R@{k}', f'L@{last}'))) for k in after)
        out = [at_least('boxes.same_box_m_psi', same, 1 - 1e-6),
               at_most('boxes.cross_box_m_psi', cross, 1e-6)]

        extracted = extract_tree(setup.process, grid)
        split = extracted.split_time(0, 1) if extracted.n == 2 else float('inf')
        logger.debug(f'{self.name}: extracted {extracted.n} branch(es), split at {split}')
        out.append(at_most('boxes.extracted_branches', abs(extracted.n - 2), 0))
        out.append(at_most('boxes.split_offset', abs(split - grid[k_b]), float(self.config.grid_step) + 1e-9))

        ens = self.ensemble('monotone')
        if ens is not None:
            boxed = TrajectoryEnsemble(ens.time_grid[k_b:], ens.positions[:, k_b:], ens.seed, ens.method)
            crossing = transition_frequency(boxed, self.left, self.right) + transition_frequency(boxed, self.right, self.left)
            out.append(at_most('boxes.monotone_crossing', crossing, 1e-3))
        return out
