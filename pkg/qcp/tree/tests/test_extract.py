import numpy as np
import pytest

from qcp.common.exceptions import GridMismatch
from qcp.hilbert import (GridSpace,
                         ModeSpace,
                         SplitOperatorPropagator,
                         WaveFunction,
                         gaussian_packet)
from qcp.squant import QuantumProcess
from qcp.tree import (extract_tree,
                      extract_tree_from_densities,
                      permanence_residuals,
                      validate_tree)


def _counter_propagating(space, prop, interval, momentum):
    a = gaussian_packet(space, 0.0, 1.0, momentum).amplitudes + gaussian_packet(space, 0.0, 1.0, -momentum).amplitudes
    return QuantumProcess(space, prop, WaveFunction(space, a).normalize(), interval)


def _separating():
    space = GridSpace(100.0, 1024)
    return _counter_propagating(space, SplitOperatorPropagator(space, 0.05), (0.0, 4.0), 6.0)


def test_separating_packets_give_two_branches():
    qp = _separating()
    times = [0.0, 1.0, 2.0, 3.0, 4.0]
    tree = extract_tree(qp, times)
    assert tree.n == 2
    assert validate_tree(tree) == []
    assert tree.split_time(0, 1) == 2.0
    # sorted by position at the final time
    assert tree.region(0, 4).mask.argmax() < tree.region(1, 4).mask.argmax()
    assert permanence_residuals(qp, tree).residual <= 1e-4


def test_extraction_is_idempotent():
    qp = _separating()
    times = [0.0, 1.0, 2.0, 3.0, 4.0]
    tree = extract_tree(qp, times)
    again = extract_tree_from_densities(qp.space, times, tree.indicator_densities())
    assert again == tree


def test_recombining_packets_give_one_branch():
    space = GridSpace(40.0, 512)
    prop = SplitOperatorPropagator(space, np.pi / 2000, potential=lambda x: 0.5 * x ** 2)
    qp = _counter_propagating(space, prop, (0.0, np.pi), 6.0)
    times = [k * np.pi / 4 for k in range(5)]
    mid = extract_tree(qp, times[:3], mass_floor=1e-3)
    assert mid.n == 2
    tree = extract_tree(qp, times, mass_floor=1e-3)
    assert tree.n == 1
    assert validate_tree(tree) == []


def test_mode_spaces_are_rejected():
    space = ModeSpace(['a', 'b'])
    with pytest.raises(GridMismatch):
        extract_tree_from_densities(space, [0.0, 1.0], [np.ones(2), np.ones(2)])


def test_gap_threshold_picks_among_valid_trees():
    qp = _separating()
    times = [0.0, 1.0, 2.0, 3.0, 4.0]
    fine = extract_tree(qp, times)
    coarse = extract_tree(qp, times, gap_threshold=10.0)
    assert fine != coarse
    assert fine.n == coarse.n == 2
    assert coarse.split_time(0, 1) > fine.split_time(0, 1)
    for tree in (fine, coarse):
        assert validate_tree(tree) == []
        assert permanence_residuals(qp, tree).residual <= 1e-4
