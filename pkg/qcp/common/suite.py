#!/usr/bin/env python3
# encoding: utf-8

import sys
import numpy as np

from tqdm import tqdm
from typing import (Callable,
                    Dict,
                    List,
                    Tuple)

from qcp.born import (born_rule_frequency_weight,
                      ensemble_frequency_weight,
                      materialized_frequency_weight)
from qcp.classical import (chebyshev_frequency_bound,
                           equivalence_sweep,
                           exact_frequency_event,
                           frequency_meta_trials)
from qcp.compat import (build_compatible_ensemble,
                        majority_bound,
                        majority_statistic,
                        sampling_band,
                        sup_expectation)
from qcp.cournot import m_psi
from qcp.hilbert import (DensePropagator,
                         GridSpace,
                         ModeSpace,
                         Region,
                         SplitOperatorPropagator,
                         WaveFunction,
                         dense_grid_hamiltonian,
                         ehrenfest_diagnostics,
                         evolve,
                         gaussian_packet,
                         project)
from qcp.scenarios.base import (Assertion,
                                ScenarioReport,
                                at_least,
                                at_most,
                                near)
from qcp.squant import (QuantumProcess,
                        SSet,
                        sigma_additivity_residual)
from qcp.utils.np_utils import max_abs_diff
from qcp.utils.sundry_utils import make_rng
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

bar_format = '{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}]'
SUITE_STREAM = 17
SUITE_DEFAULTS = dict(
    meta_trials=10000,
    majority_sets=50,
    majority_count=100000,
    reduction_draws=1000,
    frequency_max_n=12
)

Check = Callable[[int, Dict, Dict], List[Assertion]]


def chebyshev(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    bound = chebyshev_frequency_bound(0.5, 0.1, 25000)
    meta = frequency_meta_trials(0.5, 0.1, 25000, int(params['meta_trials']), seed)
    # the exact tail never exceeds the Chebyshev bound
    tail = 1 - exact_frequency_event(0.5, 0.1, 25000)
    metrics['chebyshev'] = dict(bound=bound, meta_fraction=meta.fraction, exact_tail=tail)
    return [near('chebyshev.worked_bound', bound, 1e-3, 1e-15),
            at_most('chebyshev.meta_trial_fraction', meta.fraction, bound),
            at_most('chebyshev.exact_tail', tail, bound)]


def majority(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    '''
    A slowly rotating two-level system whose "hit" weight falls from 1 to
    1 - 1e-4 across the family of s-sets.
    '''
    n, count, eps, delta = int(params['majority_sets']), int(params['majority_count']), 1e-4, 1e-3
    space = ModeSpace(['hit', 'miss'])
    omega = np.arcsin(np.sqrt(eps)) / (n - 1)
    h = omega * np.array([[0, 1], [1, 0]], dtype=np.complex128)
    qp = QuantumProcess(space, DensePropagator(space, hamiltonian=h), WaveFunction(space, [1, 0]), (0.0, n - 1.0))
    grid = [float(k) for k in range(n)]
    hit = Region.from_labels(space, ['hit'])
    ensemble = build_compatible_ensemble(qp, grid, count, seed)
    report = majority_statistic(ensemble, [SSet(t, hit) for t in grid], delta)
    bound = majority_bound(eps, delta)
    metrics['majority'] = dict(mean=report.mean, p_low=report.p_low, bound=bound)
    return [near('majority.worked_bound', majority_bound(1e-9, 1e-3), 1e-6, 1e-18),
            at_least('majority.sup_expectation', sup_expectation(1 - 1e-3, 1e-6), 1 - 1e-9 - 1e-15),
            at_most('majority.p_low', report.p_low, bound + sampling_band(bound, count))]


def equal_time_reduction(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    '''
    At a common time t > 0 of a trapped grid process, psi_hat((t, A)) carried
    forward by t is E(A) Psi(t), and M_Psi of two equal-time sets reduces to
    2 |Psi(t)|^2(A & B) / (|Psi(t)|^2(A) + |Psi(t)|^2(B)).
    '''
    rng = make_rng(seed, SUITE_STREAM)
    space = GridSpace(32.0, 256)
    step = 0.01
    prop = SplitOperatorPropagator(space, step, potential=0.5 * space.coordinates[0] ** 2)
    draws, reduction, transport = int(params['reduction_draws']), 0.0, 0.0
    per_state = 10
    for _ in range(max(draws // per_state, 1)):
        psi = WaveFunction(space, rng.normal(size=space.size) + 1j * rng.normal(size=space.size)).normalize()
        qp = QuantumProcess(space, prop, psi, (0.0, 1.0))
        for _ in range(per_state):
            t = float(rng.integers(1, 101)) * step
            a = Region(space, rng.random(space.size) < 0.5)
            b = Region(space, rng.random(space.size) < 0.5)
            s1, s2 = SSet(t, a), SSet(t, b)
            forward = evolve(qp.psi_hat(s1), prop, t)
            transport = max(transport, max_abs_diff(forward.amplitudes, project(qp.state_at(t), a).amplitudes))
            both = qp.weight(SSet(t, a & b))
            expected = 2 * both / (qp.weight(s1) + qp.weight(s2))
            reduction = max(reduction, abs(m_psi(qp, s1, s2) - expected))
    metrics['equal_time_reduction'] = dict(overlap=reduction, projection=transport)
    return [at_most('reduction.equal_time', reduction, 1e-10),
            at_most('reduction.projection', transport, 1e-10)]


def sigma_additivity(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    rng = make_rng(seed, SUITE_STREAM, 1)
    space = GridSpace(40.0, 512)
    qp = QuantumProcess(space, SplitOperatorPropagator(space, 0.01), gaussian_packet(space, -5.0, 1.0, 2.0), (0.0, 2.0))
    worst = 0.0
    for _ in range(20):
        t = float(rng.integers(0, 201)) * 0.01
        cuts = np.sort(rng.choice(np.arange(1, space.size), 7, replace=False))
        edges = [0] + cuts.tolist() + [space.size]
        worst = max(worst, sigma_additivity_residual(qp, t, [Region.from_runs(space, [(a, b)])
                                                             for a, b in zip(edges[:-1], edges[1:])]))
    metrics['sigma_additivity'] = worst
    return [at_most('sigma_additivity.residual', worst, 1e-10)]


def oracle(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    grid = GridSpace(16.0, 64)
    psi = gaussian_packet(grid, 1.0, 0.8, 0.5)
    gap = 0.0
    for potential in (None, 0.5 * grid.coordinates[0] ** 2):
        split = SplitOperatorPropagator(grid, 1e-3, potential=potential)
        dense = DensePropagator(grid, hamiltonian=dense_grid_hamiltonian(grid, 1.0, potential))
        gap = max(gap, max_abs_diff(evolve(psi, split, 0.1).amplitudes, evolve(psi, dense, 0.1).amplitudes))

    def snapshots(psi, prop, stride, count):
        out = [psi]
        for _ in range(count - 1):
            out.append(evolve(out[-1], prop, stride))
        return out
    free_space = GridSpace(40.0, 512)
    free = SplitOperatorPropagator(free_space, 0.01)
    free_report = ehrenfest_diagnostics(snapshots(gaussian_packet(free_space, -5.0, 1.0, 2.0), free, 0.05, 11), free)
    trap_space = GridSpace(20.0, 256)
    trap = SplitOperatorPropagator(trap_space, 1e-3, potential=lambda x: 0.5 * x ** 2)
    trap_report = ehrenfest_diagnostics(snapshots(gaussian_packet(trap_space, 2.0, 1 / np.sqrt(2)), trap, 0.005, 21), trap)
    metrics['oracle'] = dict(dense_gap=gap, ehrenfest_free=free_report.max_residual,
                             ehrenfest_harmonic=trap_report.max_residual)
    return [at_most('oracle.dense_split_operator', gap, 1e-6),
            at_most('oracle.ehrenfest_free', free_report.max_residual, 1e-4),
            at_most('oracle.ehrenfest_harmonic', trap_report.max_residual, 1e-4)]


def frequency_identity(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    rng = make_rng(seed, SUITE_STREAM, 2)
    worst, born_gap = 0.0, 0.0
    for d, max_n in ((2, int(params['frequency_max_n'])), (3, min(int(params['frequency_max_n']), 7))):
        space = ModeSpace([f'm{i}' for i in range(d)])
        amplitudes = rng.normal(size=d) + 1j * rng.normal(size=d)
        psi = WaveFunction(space, amplitudes).normalize()
        qp = QuantumProcess(space, DensePropagator(space, unitary=np.eye(d)), psi, (0.0, 1.0))
        region = Region.from_labels(space, ['m0'])
        p = qp.weight(SSet(0.0, region))
        for n in range(1, max_n + 1):
            a = ensemble_frequency_weight(qp, n, 0.0, region, 0.1)
            worst = max(worst, abs(a - materialized_frequency_weight(qp, n, 0.0, region, 0.1)))
            born_gap = max(born_gap, abs(a - born_rule_frequency_weight(p, n, 0.1)))
    space = ModeSpace(['yes', 'no'])
    qp = QuantumProcess(space, DensePropagator(space, unitary=np.eye(2)),
                        WaveFunction(space, [np.sqrt(0.5), np.sqrt(0.5)]), (0.0, 1.0))
    large = abs(ensemble_frequency_weight(qp, 25000, 0.0, Region.from_labels(space, ['yes']), 0.1)
                - exact_frequency_event(0.5, 0.1, 25000))
    metrics['frequency_identity'] = dict(materialized=worst, born=born_gap, large_n=large)
    return [at_most('frequency.materialized_vs_binomial', worst, 1e-12),
            at_most('frequency.born_vs_binomial', born_gap, 1e-12),
            at_most('frequency.large_n', large, 1e-12)]


def m_p_equivalence(seed: int, params: Dict, metrics: Dict) -> List[Assertion]:
    checked, violations = equivalence_sweep(max_outcomes=4, step=0.1)
    metrics['m_p_equivalence'] = dict(checked=checked, violations=len(violations))
    return [at_most('m_p.equivalence_violations', len(violations), 0)]


CHECKS: Tuple[Tuple[str, Check], ...] = (
    ('chebyshev', chebyshev),
    ('majority', majority),
    ('equal_time_reduction', equal_time_reduction),
    ('sigma_additivity', sigma_additivity),
    ('oracle', oracle),
    ('frequency_identity', frequency_identity),
    ('m_p_equivalence', m_p_equivalence)
)


def run_suite(seed: int = 7, progress: bool = False, **kwargs) -> ScenarioReport:
    '''
    Run the library-level property checks and collect them in one report.
    params:
        kwargs: overrides of SUITE_DEFAULTS (smaller counts for quick runs)
    '''
    params = dict(SUITE_DEFAULTS)
    params.update({k: v for k, v in kwargs.items() if v is not None})
    report = ScenarioReport('suite', int(seed), dict(params))
    for name, check in tqdm(CHECKS, file=sys.stderr, disable=not progress, bar_format=bar_format, desc='suite'):
        logger.debug(f'suite: {name}')
        report.assertions.extend(check(int(seed), params, report.metrics))
    return report
