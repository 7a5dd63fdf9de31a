import numpy as np
import pytest

from qcp.common.exceptions import TooFewSnapshots
from qcp.hilbert import (GridSpace,
                         SplitOperatorPropagator,
                         WaveFunction,
                         ehrenfest_diagnostics,
                         evolve,
                         gaussian_packet)


def _trajectory(psi, prop, stride, count):
    snaps = [psi]
    for _ in range(count - 1):
        snaps.append(evolve(snaps[-1], prop, stride))
    return snaps


def test_free_packet_satisfies_ehrenfest():
    space = GridSpace(40.0, 512)
    prop = SplitOperatorPropagator(space, 0.01)
    report = ehrenfest_diagnostics(_trajectory(gaussian_packet(space, -5.0, 1.0, 2.0), prop, 0.05, 11), prop)
    assert not report.flagged
    assert report.max_residual <= 1e-4
    assert np.allclose(report.force_mean, 0.0)


def test_harmonic_packet_satisfies_ehrenfest():
    space = GridSpace(20.0, 256)
    prop = SplitOperatorPropagator(space, 1e-3, potential=lambda x: 0.5 * x ** 2)
    psi = gaussian_packet(space, 2.0, 1 / np.sqrt(2), 0.0)
    report = ehrenfest_diagnostics(_trajectory(psi, prop, 0.005, 21), prop)
    assert report.max_residual <= 1e-4
    # <P> picks up -<Q> dt from the restoring force
    assert report.p_mean[-1, 0] < -0.1


def test_constant_state_has_no_residual():
    space = GridSpace(16.0, 64)
    prop = SplitOperatorPropagator(space, 0.5)
    report = ehrenfest_diagnostics(_trajectory(WaveFunction.uniform(space), prop, 0.5, 4), prop)
    assert report.max_residual <= 1e-12


def test_too_few_snapshots():
    space = GridSpace(16.0, 64)
    prop = SplitOperatorPropagator(space, 0.5)
    with pytest.raises(TooFewSnapshots):
        ehrenfest_diagnostics(_trajectory(WaveFunction.uniform(space), prop, 0.5, 2), prop)
