import numpy as np
import pytest

from qcp.common.exceptions import EmptySSetList
from qcp.compat import (build_compatible_ensemble,
                        majority_bound,
                        majority_statistic,
                        sampling_band,
                        sup_expectation)
from qcp.hilbert import (DensePropagator,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.squant import (QuantumProcess,
                        SSet)

GRID = [0.0, 1.0, 2.0, 3.0, 4.0]


def _mostly_hit():
    space = ModeSpace(['hit', 'miss'])
    psi = WaveFunction(space, [np.sqrt(0.98), np.sqrt(0.02)])
    return QuantumProcess(space, DensePropagator(space, unitary=np.eye(2)), psi, (0.0, 4.0))


def test_sup_expectation():
    assert sup_expectation(1.0, 0.3) == 1.0
    assert sup_expectation(0.2, 0.0) == 1.0
    assert sup_expectation(1 - 1e-3, 1e-6) >= 1 - 1e-9 - 1e-15
    assert majority_bound(1e-9, 1e-3) == pytest.approx(1e-6)


def test_single_certain_sset():
    qp = _mostly_hit()
    ens = build_compatible_ensemble(qp, GRID, 1000, seed=1)
    report = majority_statistic(ens, [SSet(2.0, Region.full(qp.space))])
    assert np.all(report.y == 1.0)
    assert report.p_low == 0.0


def test_majority_inequality():
    qp = _mostly_hit()
    hit = Region.from_labels(qp.space, ['hit'])
    ssets = [SSet(t, hit) for t in GRID]
    eps, delta = 0.02, 0.5
    for method in ('monotone', 'independent'):
        ens = build_compatible_ensemble(qp, GRID, 20000, seed=4, method=method)
        report = majority_statistic(ens, ssets, delta=delta)
        assert report.mean >= 1 - eps - sampling_band(1 - eps, ens.count)
        assert report.p_low <= majority_bound(eps, delta) + sampling_band(eps, ens.count)
        values, freqs = report.distribution()
        assert abs(freqs.sum() - 1) <= 1e-12


def test_empty_sset_list():
    qp = _mostly_hit()
    ens = build_compatible_ensemble(qp, GRID, 10, seed=1)
    with pytest.raises(EmptySSetList):
        majority_statistic(ens, [])
