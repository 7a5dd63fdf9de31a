import numpy as np
import pytest

from qcp.born import (born_rule_frequency_weight,
                      ensemble_frequency_weight,
                      materialized_frequency_weight)
from qcp.hilbert import (DensePropagator,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.squant import QuantumProcess


def _random_process(n, seed):
    rng = np.random.default_rng(seed)
    space = ModeSpace([f'm{i}' for i in range(n)])
    h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    psi = WaveFunction(space, rng.normal(size=n) + 1j * rng.normal(size=n)).normalize()
    return QuantumProcess(space, DensePropagator(space, hamiltonian=h + h.conj().T), psi, (0.0, 1.0))


def _balanced():
    space = ModeSpace(['in', 'out'])
    return QuantumProcess(space, DensePropagator(space, unitary=np.eye(2)),
                          WaveFunction(space, [1.0, 1.0]).normalize(), (0.0, 1.0))


def test_trivial_window():
    qp = _balanced()
    region = Region.from_labels(qp.space, ['in'])
    assert ensemble_frequency_weight(qp, 1, 0.0, region, 0.5) == pytest.approx(1.0)


def test_large_ensemble():
    qp = _balanced()
    region = Region.from_labels(qp.space, ['in'])
    assert ensemble_frequency_weight(qp, 25000, 1.0, region, 0.1) >= 0.999


def test_binomial_matches_materialized_product():
    qp = _balanced()
    region = Region.from_labels(qp.space, ['in'])
    assert ensemble_frequency_weight(qp, 12, 0.0, region, 0.2) == \
        pytest.approx(materialized_frequency_weight(qp, 12, 0.0, region, 0.2), abs=1e-10)


def test_frequency_identity_on_random_splits():
    rng = np.random.default_rng(11)
    for seed, (d, n_max) in enumerate([(2, 12), (3, 7)]):
        qp = _random_process(d, seed)
        for n in range(1, n_max + 1):
            mask = np.zeros(d, dtype=bool)
            mask[rng.integers(d)] = True
            region = Region(qp.space, mask)
            t, eps = float(rng.uniform(0, 1)), float(rng.uniform(0.05, 0.4))
            binomial = ensemble_frequency_weight(qp, n, t, region, eps)
            assert binomial == pytest.approx(materialized_frequency_weight(qp, n, t, region, eps), abs=1e-10)


def test_both_derivations_agree():
    qp = _random_process(2, 5)
    region = Region.from_labels(qp.space, ['m0'])
    for n in (1, 5, 10):
        qcp_path = materialized_frequency_weight(qp, n, 0.5, region, 0.15)
        p = qp.weight(qp.sset(0.5, region))
        assert born_rule_frequency_weight(p, n, 0.15) == pytest.approx(qcp_path, abs=1e-12)
