import numpy as np
import pytest

from qcp.common.exceptions import (TimeOffGrid,
                                   UnknownMethod)
from qcp.compat import (TrajectoryEnsemble,
                        build_compatible_ensemble,
                        compatibility_check,
                        sampling_band,
                        transition_frequency,
                        transport_coupling)
from qcp.hilbert import (DensePropagator,
                         GridSpace,
                         ModeSpace,
                         Region,
                         SplitOperatorPropagator,
                         WaveFunction,
                         beam_splitter_matrix,
                         gaussian_packet)
from qcp.squant import (QuantumProcess,
                        SSet)

TIMES = [0.0, 0.25, 0.5, 0.75, 1.0]


def _two_packets():
    space = GridSpace(40.0, 512)
    a = gaussian_packet(space, -8.0, 1.0).amplitudes + gaussian_packet(space, 8.0, 1.0).amplitudes
    psi = WaveFunction(space, a).normalize()
    return QuantumProcess(space, SplitOperatorPropagator(space, 0.05), psi, (0.0, 1.0), name='two packets')


def _block_process():
    space = ModeSpace(['a1', 'a2', 'b1', 'b2'])
    u = np.zeros((4, 4), dtype=complex)
    u[:2, :2] = beam_splitter_matrix(0.3)
    u[2:, 2:] = beam_splitter_matrix(0.6)
    psi = WaveFunction(space, [1, 0, 1, 0]).normalize()
    return QuantumProcess(space, DensePropagator(space, unitary=u), psi, (0.0, 4.0))


def _static_process(amplitudes, interval=(0.0, 4.0)):
    space = ModeSpace([f'm{i}' for i in range(len(amplitudes))])
    return QuantumProcess(space, DensePropagator(space, unitary=np.eye(space.size)),
                          WaveFunction(space, amplitudes).normalize(), interval)


def _check_marginals(ens, qp, regions):
    for t in ens.time_grid:
        for r in regions:
            p = qp.weight(SSet(t, r))
            assert abs(ens.frequency(SSet(t, r)) - p) <= sampling_band(p, ens.count) + 1e-12


def test_static_state_any_method():
    qp = _static_process([0.6, 0.3j, 0.5, 0.2])
    regions = [Region.from_labels(qp.space, [l]) for l in qp.space.labels]
    for method in ('monotone', 'independent'):
        ens = build_compatible_ensemble(qp, [0.0, 1.0, 2.0], 20000, seed=1, method=method)
        _check_marginals(ens, qp, regions)
    ens = build_compatible_ensemble(qp, [0.0, 1.0, 2.0], 2000, seed=1, method='monotone')
    assert np.all(ens.positions == ens.positions[:, :1])


def test_grid_marginals_and_persistence():
    qp = _two_packets()
    left = Region.from_intervals(qp.space, [(-20.0, 0.0)])
    monotone = build_compatible_ensemble(qp, TIMES, 100000, seed=7, method='monotone')
    independent = build_compatible_ensemble(qp, TIMES, 100000, seed=7, method='independent')
    for ens in (monotone, independent):
        _check_marginals(ens, qp, [left, ~left])
    crossing = transition_frequency(monotone, left, ~left) + transition_frequency(monotone, ~left, left)
    assert crossing <= 1e-3
    control = transition_frequency(independent, left, ~left) + transition_frequency(independent, ~left, left)
    assert control >= 0.4


def test_compatibility_negative_control():
    qp = _two_packets()
    left = Region.from_intervals(qp.space, [(-20.0, 0.0)])
    pairs = [(SSet(0.0, left), SSet(1.0, left)), (SSet(0.0, ~left), SSet(1.0, ~left)),
             (SSet(0.5, left), SSet(0.5, left))]
    monotone = build_compatible_ensemble(qp, TIMES, 100000, seed=3)
    report = compatibility_check(monotone, qp, pairs, eps=1e-2)
    assert report.passed
    assert report.pairs[2].m_psi == 1.0 and report.pairs[2].m_p == 1.0
    assert report.pairs[0].method_dependent and not report.pairs[2].method_dependent
    independent = build_compatible_ensemble(qp, TIMES, 100000, seed=3, method='independent')
    assert len(compatibility_check(independent, qp, pairs, eps=1e-2).violations) == 2


def test_mode_transport_keeps_blocks_apart():
    qp = _block_process()
    a = Region.from_labels(qp.space, ['a1', 'a2'])
    b = ~a
    grid = [0.0, 1.0, 2.0, 3.0, 4.0]
    pi = transport_coupling(qp, 1.0, 2.0)
    assert np.all(pi[:2, 2:] == 0) and np.all(pi[2:, :2] == 0)
    ens = build_compatible_ensemble(qp, grid, 20000, seed=5)
    _check_marginals(ens, qp, [Region.from_labels(qp.space, [l]) for l in qp.space.labels])
    assert transition_frequency(ens, a, b) == 0.0
    assert transition_frequency(ens, b, a) == 0.0
    ind = build_compatible_ensemble(qp, grid, 20000, seed=5, method='independent')
    assert transition_frequency(ind, a, b, ever=True) > 0.5


def test_beam_splitter_coupling_marginals():
    modes = ModeSpace(['upper', 'lower'])
    qp = QuantumProcess(modes, DensePropagator(modes, unitary=beam_splitter_matrix(0.5)),
                        WaveFunction.from_labels(modes, {'upper': 1}), (0.0, 1.0))
    pi = transport_coupling(qp, 0.0, 1.0)
    assert np.allclose(pi, [[0.5, 0.5], [0.0, 0.0]], atol=1e-9)


def test_workers_do_not_change_the_sample():
    qp = _two_packets()
    one = build_compatible_ensemble(qp, TIMES, 2500, seed=11, method='independent', chunk_size=1000)
    three = build_compatible_ensemble(qp, TIMES, 2500, seed=11, method='independent', chunk_size=1000, workers=3)
    assert np.array_equal(one.positions, three.positions)


def test_errors():
    qp = _two_packets()
    with pytest.raises(UnknownMethod):
        build_compatible_ensemble(qp, TIMES, 10, seed=0, method='bohm')
    ens = build_compatible_ensemble(qp, TIMES, 10, seed=0)
    with pytest.raises(TimeOffGrid):
        ens.frequency(SSet(0.3, Region.full(qp.space)))


def test_csv_export(tmp_path):
    qp = _static_process([1, 1, 1])
    ens = build_compatible_ensemble(qp, [0.0, 1.0, 2.0], 50, seed=2, method='independent')
    path = str(tmp_path / 'ensemble.csv')
    ens.to_csv(path)
    back = TrajectoryEnsemble.from_csv(path)
    assert np.array_equal(back.positions, ens.positions)
    assert np.array_equal(back.time_grid, ens.time_grid)
    with open(path) as f:
        assert f.readline().strip() == '0,1,2'
