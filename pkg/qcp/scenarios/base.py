#!/usr/bin/env python3
# encoding: utf-8

import hashlib
import itertools
import numpy as np

from dataclasses import (dataclass,
                         field)
from types import MappingProxyType
from typing import (Any,
                    Dict,
                    List,
                    Mapping,
                    Optional,
                    Sequence,
                    Tuple)

from qcp.born import (MeasurementModel,
                      Povm,
                      build_povm,
                      direct_probability,
                      neutral_weight,
                      outcome_probability)
from qcp.common.config import Config
from qcp.common.decorator import lazy_property
from qcp.common.exceptions import (MarginalMismatch,
                                   TimeOffGrid)
from qcp.compat import (TrajectoryEnsemble,
                        build_compatible_ensemble,
                        compatibility_check,
                        sampling_band)
from qcp.cournot import (consistency_scan,
                         m_psi)
from qcp.hilbert import (GridSpace,
                         Region)
from qcp.squant import (QuantumProcess,
                        SSet,
                        sigma_additivity_residual)
from qcp.tree import (TreeStructure,
                      permanence_residuals,
                      residence_statistic,
                      validate_tree)
from qcp.utils.sundry_utils import make_rng
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

PARTITION_STREAM = 13
RUN_DEFAULTS = dict(
    count=100000,
    workers=1,
    threshold=1e-3,
    delta=1e-3,
    slack=None,
    scan_pairs=1000,
    scan_threshold=0.05,
    partition_cells=8,
    partition_times=20,
    max_dimension=2 ** 20
)


@dataclass(frozen=True)
class Assertion:
    '''
    relation 'le': value <= tolerance; 'ge': value >= tolerance;
    'near': |value - target| <= tolerance
    '''
    name: str
    value: float
    tolerance: float
    relation: str = 'le'
    target: Optional[float] = None

    @property
    def passed(self) -> bool:
        v = self.value
        if v is None or v != v:
            return False
        if self.relation == 'le':
            return v <= self.tolerance
        if self.relation == 'ge':
            return v >= self.tolerance
        return abs(v - self.target) <= self.tolerance

    def describe(self) -> str:
        if self.relation == 'near':
            return f'{self.value:.12g} ~ {self.target:.12g} (tol {self.tolerance:.1e})'
        return f'{self.value:.12g} {"<=" if self.relation == "le" else ">="} {self.tolerance:.12g}'

    def to_row(self) -> Dict[str, Any]:
        return dict(name=self.name, value=float(self.value), relation=self.relation,
                    target=None if self.target is None else float(self.target),
                    tolerance=float(self.tolerance), passed=bool(self.passed))


def at_most(name: str, value: float, bound: float) -> Assertion:
    return Assertion(name, float(value), float(bound), 'le')


def at_least(name: str, value: float, bound: float) -> Assertion:
    return Assertion(name, float(value), float(bound), 'ge')


def near(name: str, value: float, target: float, tolerance: float) -> Assertion:
    return Assertion(name, float(value), float(tolerance), 'near', float(target))


@dataclass(frozen=True)
class ScenarioSetup:
    '''
    Everything a scenario declares before any ensemble is sampled.
    '''
    process: QuantumProcess
    time_grid: Tuple[float, ...]
    ssets: Mapping[str, SSet] = field(default_factory=dict)
    tree: Optional[TreeStructure] = None
    model: Optional[MeasurementModel] = None
    micro_state: Optional[np.ndarray] = None
    compat_pairs: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'time_grid', tuple(float(t) for t in self.time_grid))
        object.__setattr__(self, 'ssets', MappingProxyType(dict(self.ssets)))
        grid = np.asarray(self.time_grid)
        for name, s in self.ssets.items():
            if not np.any(np.isclose(grid, s.time, rtol=0, atol=1e-9)):
                raise TimeOffGrid(f's-set {name} at t={s.time} is not on the time grid')
            self.process.check_time(s.time)
        if self.tree is not None and self.tree.time_grid != self.time_grid:
            raise TimeOffGrid('the declared tree uses another time grid')
        for a, b in self.compat_pairs:
            assert a in self.ssets and b in self.ssets, f'unknown s-set in pair ({a}, {b}).'

    def fingerprint(self) -> str:
        '''
        sha256 over the initial amplitudes and the declared regions
        '''
        h = hashlib.sha256(np.ascontiguousarray(self.process.initial_state.amplitudes).tobytes())
        for name in sorted(self.ssets):
            s = self.ssets[name]
            h.update(f'{name}:{s.time!r}:'.encode())
            h.update(np.packbits(s.region.mask).tobytes())
        return h.hexdigest()


@dataclass
class ScenarioReport:
    name: str
    seed: int
    config: Dict[str, Any]
    assertions: List[Assertion] = field(default_factory=list)
    metrics: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> List[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def assertion(self, name: str) -> Assertion:
        for a in self.assertions:
            if a.name == name:
                return a
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return dict(scenario=self.name, seed=self.seed, passed=self.passed, config=self.config,
                    assertions=[a.to_row() for a in self.assertions],
                    metrics=self.metrics, notes=list(self.notes))


class Scenario(object):
    '''
    A configured experiment: `build` declares the process, time grid,
    s-sets and optional tree or measurement model; `checks` turns them into
    scenario assertions. `run` adds the checks every scenario shares.
    '''
    figure = ''

    def __init__(self, name: str = '', seed: int = 0, run: Optional[Config] = None, **kwargs):
        self.name = name or self.__class__.__name__
        self.seed = int(seed)
        run_args = Config(**RUN_DEFAULTS)
        if run is not None:
            run_args.update(run.to_dict if isinstance(run, Config) else dict(run))
        self.run_args = run_args
        self.config = Config(**kwargs)
        self.povm: Optional[Povm] = None

    def build(self) -> ScenarioSetup:
        raise NotImplementedError

    def checks(self, setup: ScenarioSetup) -> List[Assertion]:
        raise NotImplementedError

    @lazy_property
    def setup(self) -> ScenarioSetup:
        return self.build()

    @property
    def process(self) -> QuantumProcess:
        return self.setup.process

    def sset(self, name: str) -> SSet:
        return self.setup.ssets[name]

    def weight(self, name: str) -> float:
        return self.process.weight(self.sset(name))

    def m(self, a: str, b: str) -> float:
        return m_psi(self.process, self.sset(a), self.sset(b))

    def ensemble(self, method: str = 'monotone') -> Optional[TrajectoryEnsemble]:
        '''
        Ensemble over the declared time grid, built once per method; None
        when no coupling exists or ensembles are switched off (count 0).
        '''
        cache = self.__dict__.setdefault('_ensemble_cache', {})
        if method not in cache:
            count = int(self.run_args.count)
            if count <= 0:
                cache[method] = None
            else:
                try:
                    cache[method] = build_compatible_ensemble(
                        self.process, self.setup.time_grid, count, self.seed, method=method,
                        workers=int(self.run_args.workers), threshold=float(self.run_args.threshold))
                except MarginalMismatch as e:
                    logger.warning(f'{self.name}: no {method} coupling ({e})')
                    cache[method] = None
        return cache[method]

    def run(self) -> ScenarioReport:
        setup = self.setup
        report = ScenarioReport(self.name, self.seed, self.config.to_dict)
        report.metrics['fingerprint'] = setup.fingerprint()
        report.metrics['dimension'] = setup.process.space.size
        report.assertions.extend(self.checks(setup))
        report.assertions.extend(self._consistency(setup, report))
        if isinstance(setup.process.space, GridSpace):
            report.assertions.extend(self._sigma_additivity(setup, report))
        permanence = None
        if setup.tree is not None:
            tree_assertions, permanence = self._tree(setup, report)
            report.assertions.extend(tree_assertions)
        if setup.model is not None:
            report.assertions.extend(self._povm(setup, report))
        report.assertions.extend(self._ensembles(setup, report, permanence))
        logger.info(f'{self.name}: {len(report.assertions) - len(report.failures)}/{len(report.assertions)} assertions passed')
        return report

    def _consistency(self, setup: ScenarioSetup, report: ScenarioReport) -> List[Assertion]:
        scan = consistency_scan(setup.process, setup.time_grid, int(self.run_args.scan_pairs),
                                float(self.run_args.scan_threshold), self.seed)
        report.metrics['consistency'] = dict(checked=scan.checked, anchored=scan.anchored, forced=scan.forced,
                                             max_min_m=scan.max_min_m, violations=len(scan.violations))
        return [at_most('consistency.violations', len(scan.violations), 0),
                at_most('consistency.max_min_m', scan.max_min_m, 1 / np.sqrt(2) + 1e-12)]

    def _sigma_additivity(self, setup: ScenarioSetup, report: ScenarioReport) -> List[Assertion]:
        rng = make_rng(self.seed, PARTITION_STREAM)
        space = setup.process.space
        cells = int(self.run_args.partition_cells)
        worst = 0.0
        for _ in range(int(self.run_args.partition_times)):
            t = float(rng.choice(setup.time_grid))
            cuts = np.sort(rng.choice(np.arange(1, space.size), cells - 1, replace=False))
            edges = [0] + cuts.tolist() + [space.size]
            partition = [Region.from_runs(space, [(a, b)]) for a, b in zip(edges[:-1], edges[1:])]
            worst = max(worst, sigma_additivity_residual(setup.process, t, partition))
        report.metrics['sigma_additivity'] = worst
        return [at_most('sigma_additivity.residual', worst, 1e-10)]

    def _tree(self, setup: ScenarioSetup, report: ScenarioReport):
        violations = validate_tree(setup.tree)
        report.metrics['tree'] = dict(branches=setup.tree.n,
                                      violations=[v.describe() for v in violations],
                                      weights=setup.tree.branch_weights(setup.process)[:, -1].tolist())
        out = [at_most('tree.axiom_violations', len(violations), 0)]
        if violations:
            return out, None
        permanence = permanence_residuals(setup.process, setup.tree)
        report.metrics['tree']['support_residual'] = permanence.support_residual
        report.metrics['tree']['overlap_residual'] = permanence.overlap
        out.append(at_most('tree.permanence_residual', permanence.residual, self.permanence_tolerance))
        return out, permanence

    permanence_tolerance = 1e-10
    # scenarios whose declared pairs and tree must defeat the independent coupling
    independent_control = False
    control_gap = 0.1

    def _povm(self, setup: ScenarioSetup, report: ScenarioReport) -> List[Assertion]:
        model = setup.model
        self.povm = povm = build_povm(model, seed=self.seed)
        phi = setup.micro_state
        report.metrics['povm'] = dict(completeness=povm.completeness_residual,
                                      min_eigenvalue=povm.min_eigenvalue,
                                      self_adjoint=povm.self_adjoint_residual)
        out = [at_most('povm.completeness', povm.completeness_residual, 1e-10),
               at_least('povm.min_eigenvalue', povm.min_eigenvalue, -1e-10)]
        if phi is not None:
            gap = max(abs(outcome_probability(povm, [a], phi) - direct_probability(model, [a], phi))
                      for a in model.atoms)
            out.append(at_most('povm.direct_agreement', gap, 1e-10))
            out.append(at_most('povm.neutral_weight', neutral_weight(model, phi), 1e-10))
        return out

    def _declared_pairs(self, setup: ScenarioSetup) -> List[Tuple[SSet, SSet]]:
        names = setup.compat_pairs or tuple(itertools.combinations(sorted(setup.ssets), 2))
        return [(setup.ssets[a], setup.ssets[b]) for a, b in names]

    def _ensembles(self, setup: ScenarioSetup, report: ScenarioReport, permanence) -> List[Assertion]:
        monotone = self.ensemble('monotone')
        if monotone is None:
            report.notes.append('compatibility: no monotone-transport ensemble was built')
            return []
        pairs = self._declared_pairs(setup)
        eps, slack = float(self.run_args.threshold), self.run_args.slack
        if slack is None:
            slack = eps + sampling_band(0.5, monotone.count)
        checked = compatibility_check(monotone, setup.process, pairs, eps, slack)
        report.metrics['compatibility'] = dict(pairs=len(checked.pairs), violations=len(checked.violations),
                                               slack=slack)
        out = [at_most('compatibility.violations', len(checked.violations), 0)]

        control = self.ensemble('independent')
        if control is not None:
            negative = compatibility_check(control, setup.process, pairs, eps, slack)
            report.metrics['compatibility']['independent_violations'] = len(negative.violations)
            report.notes.append('the independent ensemble is a negative control; its joint frequencies '
                                'depend on the construction and are not predictions')
            if self.independent_control:
                out.append(at_least('control.independent_violations', len(negative.violations), 1))

        if setup.tree is not None and permanence is not None:
            eps_tree = permanence.residual
            residence = residence_statistic(monotone, setup.tree, setup.time_grid, float(self.run_args.delta), eps_tree)
            report.metrics['residence'] = dict(mean=residence.mean, p_low=residence.p_low, bound=residence.bound)
            out.append(at_most('residence.branch_crossing', 1 - residence.mean, 1e-3))
            out.append(at_least('residence.mean', residence.mean,
                                residence.bound - sampling_band(residence.bound, monotone.count) - 1 / monotone.count))
            if control is not None and self.independent_control:
                loose = residence_statistic(control, setup.tree, setup.time_grid, float(self.run_args.delta), eps_tree)
                report.metrics['residence']['independent_mean'] = loose.mean
                out.append(at_most('control.independent_residence', loose.mean, 1 - self.control_gap))
        return out
