import numpy as np
import pytest

from qcp.common.exceptions import (GridMismatch,
                                   InvalidTree)
from qcp.compat import build_compatible_ensemble
from qcp.hilbert import (DensePropagator,
                         ModeNetwork,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.squant import QuantumProcess
from qcp.tree import (TreeStructure,
                      load_tree,
                      permanence_residuals,
                      residence_statistic,
                      save_tree,
                      validate_tree)

TIMES = [0.0, 1.0, 2.0]


def _two_wells():
    space = ModeSpace(['l', 'r'])
    psi = WaveFunction(space, [0.6, 0.8])
    return QuantumProcess(space, DensePropagator(space, unitary=np.eye(2)), psi, (0.0, 2.0))


def _regions(space):
    return Region.full(space), Region.from_labels(space, ['l']), Region.from_labels(space, ['r'])


def _two_branch_tree(space):
    full, l, r = _regions(space)
    return TreeStructure(TIMES, [[full, l, l], [full, r, r]])


def test_single_branch_is_valid():
    space = ModeSpace(['l', 'r'])
    full, _, _ = _regions(space)
    tree = TreeStructure(TIMES, [[full, full, full]])
    assert validate_tree(tree) == []
    assert tree.partition_at(2).groups == ((0,),)


def test_two_branch_partition():
    tree = _two_branch_tree(ModeSpace(['l', 'r']))
    assert validate_tree(tree) == []
    assert tree.partition_at(0).groups == ((0, 1),)
    assert tree.partition_at(1).groups == ((0,), (1,))
    assert tree.split_time(0, 1) == 1.0
    assert tree.sigma((0, 1), 2).is_full


def test_axiom_violations():
    space = ModeSpace(['l', 'r'])
    full, l, r = _regions(space)
    rejoin = TreeStructure(TIMES, [[full, l, full], [full, r, full]])
    axioms = {v.axiom for v in validate_tree(rejoin)}
    assert 'no_rejoin' in axioms and 'full_split' in axioms
    rootless = TreeStructure(TIMES, [[l, l, l], [r, r, r]])
    assert [v.axiom for v in validate_tree(rootless)] == ['common_root']
    overlapping = TreeStructure(TIMES, [[full, full, l], [full, l, r]])
    assert 'disjoint_or_equal' in {v.axiom for v in validate_tree(overlapping)}


def test_beam_splitter_branches():
    space = ModeSpace(['a', 'b'])
    net = ModeNetwork(space)
    net.beam_splitter(1, 'a', 'b')
    qp = QuantumProcess(space, net.propagator(), WaveFunction.from_labels(space, {'a': 1.0}), (0.0, 2.0))
    a, b = Region.from_labels(space, ['a']), Region.from_labels(space, ['b'])
    tree = TreeStructure(TIMES, [[Region.full(space), a, a], [Region.full(space), b, b]])
    assert validate_tree(tree) == []
    w = tree.branch_weights(qp)
    assert np.allclose(w[:, 1:], 0.5, atol=1e-12)
    assert permanence_residuals(qp, tree).residual <= 1e-10


def test_static_wells_are_permanent():
    qp = _two_wells()
    report = permanence_residuals(qp, _two_branch_tree(qp.space))
    assert report.support_residual <= 1e-10
    assert report.overlap <= 1e-10


def test_permanence_rejects_invalid_tree():
    qp = _two_wells()
    full, l, r = _regions(qp.space)
    with pytest.raises(InvalidTree):
        permanence_residuals(qp, TreeStructure(TIMES, [[full, l, full], [full, r, full]]))


def test_residence_statistic():
    qp = _two_wells()
    tree = _two_branch_tree(qp.space)
    ens = build_compatible_ensemble(qp, TIMES, 5000, seed=3, method='monotone')
    report = residence_statistic(ens, tree, TIMES, delta=1e-3, eps=1e-10)
    assert report.mean == 1.0
    assert report.p_low == 0.0
    assert report.bound == pytest.approx(1 - 1e-10)
    with pytest.raises(GridMismatch):
        residence_statistic(ens, tree, [0.5])


def test_save_and_load(tmp_path):
    space = ModeSpace(['l', 'r'])
    tree = _two_branch_tree(space)
    path = str(tmp_path / 'trees' / 'two_wells.yaml')
    save_tree(path, tree)
    assert load_tree(path, space) == tree


def test_independent_residence_falls_below_one():
    qp = _two_wells()
    tree = _two_branch_tree(qp.space)
    monotone = build_compatible_ensemble(qp, TIMES, 5000, seed=4, method='monotone')
    independent = build_compatible_ensemble(qp, TIMES, 5000, seed=4, method='independent')
    assert residence_statistic(monotone, tree, [1.0]).mean == 1.0
    # 0.36^2 + 0.64^2
    assert residence_statistic(independent, tree, [1.0]).mean <= 0.6
