import numpy as np
import pytest

from qcp.common.exceptions import (IntervalMismatch,
                                   ProductDimensionTooLarge)
from qcp.hilbert import (DensePropagator,
                         GridSpace,
                         ModeSpace,
                         Region,
                         SplitOperatorPropagator,
                         WaveFunction,
                         gaussian_packet)
from qcp.squant import (ProductSSet,
                        QuantumProcess,
                        SSet,
                        SymbolicProduct,
                        power,
                        product)
from qcp.utils.np_utils import max_abs_diff


def _mode_process(labels, seed, interval=(0.0, 2.0)):
    rng = np.random.default_rng(seed)
    space = ModeSpace(labels)
    n = space.size
    h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    psi = WaveFunction(space, rng.normal(size=n) + 1j * rng.normal(size=n)).normalize()
    return QuantumProcess(space, DensePropagator(space, hamiltonian=h + h.conj().T), psi, interval)


def _random_region(space, rng):
    mask = rng.random(space.size) < 0.5
    mask[0] = True
    return Region(space, mask)


def test_product_weights_factorize():
    q1, q2 = _mode_process(['a', 'b', 'c'], 1), _mode_process(['x', 'y'], 2)
    q = product(q1, q2)
    rng = np.random.default_rng(3)
    for _ in range(10):
        s = ProductSSet(1.3, (_random_region(q1.space, rng), _random_region(q2.space, rng)))
        assert abs(q.weight(s.concrete()) - q1.weight(s.factor(0)) * q2.weight(s.factor(1))) <= 1e-10
        expected = np.kron(q1.psi_hat(s.factor(0)).amplitudes, q2.psi_hat(s.factor(1)).amplitudes)
        assert max_abs_diff(q.psi_hat(s.concrete()).amplitudes, expected) <= 1e-10


def test_full_second_factor_gives_marginal():
    q1, q2 = _mode_process(['a', 'b', 'c'], 4), _mode_process(['x', 'y'], 5)
    q = product(q1, q2)
    r1 = Region.from_labels(q1.space, ['b'])
    s = ProductSSet(0.8, (r1, Region.full(q2.space)))
    assert abs(q.weight(s.concrete()) - q1.weight(SSet(0.8, r1))) <= 1e-10


def test_product_is_associative():
    q1, q2, q3 = _mode_process(['a', 'b'], 6), _mode_process(['x', 'y', 'z'], 7), _mode_process(['u', 'v'], 8)
    left, right = product(product(q1, q2), q3), product(q1, product(q2, q3))
    assert left.space == right.space
    rng = np.random.default_rng(9)
    regions = (_random_region(q1.space, rng), _random_region(q2.space, rng), _random_region(q3.space, rng))
    s = ProductSSet(1.1, regions).concrete()
    assert abs(left.weight(s) - right.weight(s)) <= 1e-10


def test_interval_mismatch():
    with pytest.raises(IntervalMismatch):
        product(_mode_process(['a', 'b'], 1), _mode_process(['a', 'b'], 1, interval=(0.0, 3.0)))


def test_power_dimension_cap():
    qp = _mode_process(['up', 'down'], 10, interval=(0.0, 1.0))
    q12 = power(qp, 12)
    assert q12.space.size == 2 ** 12
    s = ProductSSet(1.0, (Region.from_labels(qp.space, ['up']),) * 12)
    w = qp.weight(s.factor(0))
    assert abs(q12.weight(s.concrete()) - w ** 12) <= 1e-10
    with pytest.raises(ProductDimensionTooLarge):
        power(qp, 40)


def test_grid_products_stay_symbolic():
    space = GridSpace(40.0, 256)
    prop = SplitOperatorPropagator(space, 0.05)
    q1 = QuantumProcess(space, prop, gaussian_packet(space, -3.0, 1.0, 1.0), (0.0, 1.0))
    q2 = QuantumProcess(space, prop, gaussian_packet(space, 2.0, 1.5, -0.5), (0.0, 1.0))
    q = product(q1, q2)
    assert isinstance(q, SymbolicProduct)
    left = Region.from_intervals(space, [(-20.0, 0.0)])
    s = ProductSSet(1.0, (left, ~left))
    assert abs(q.weight(s) - q1.weight(s.factor(0)) * q2.weight(s.factor(1))) <= 1e-12
    assert power(q1, 3).dims == (256, 256, 256)
