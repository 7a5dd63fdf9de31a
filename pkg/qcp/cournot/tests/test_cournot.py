import numpy as np
import pytest

from qcp.common.exceptions import (BothWeightsVanish,
                                   MalformedCandidate,
                                   VanishingWeight)
from qcp.cournot import (DISJOINT_BOUND,
                         complement_overlap,
                         consistency_probe,
                         consistency_scan,
                         cournot_verdict,
                         difference_norm,
                         fac_ratio,
                         j_residual,
                         m_psi,
                         m_psi_gap,
                         particular_case,
                         support_condition)
from qcp.hilbert import (DensePropagator,
                         ModeSpace,
                         Region,
                         WaveFunction)
from qcp.squant import (QuantumProcess,
                        SSet)


def _random_process(n=6, seed=0):
    rng = np.random.default_rng(seed)
    space = ModeSpace([f'm{i}' for i in range(n)])
    h = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    psi = WaveFunction(space, rng.normal(size=n) + 1j * rng.normal(size=n)).normalize()
    return QuantumProcess(space, DensePropagator(space, hamiltonian=h + h.conj().T), psi, (0.0, 3.0))


def _static_process(amplitudes):
    space = ModeSpace(['yes', 'no'])
    psi = WaveFunction(space, amplitudes)
    return QuantumProcess(space, DensePropagator(space, unitary=np.eye(2)), psi, (0.0, 1.0))


def _random_sset(qp, rng, times=(0.0, 0.7, 1.5, 3.0)):
    mask = rng.random(qp.space.size) < 0.5
    mask[rng.integers(qp.space.size)] = True
    return SSet(float(rng.choice(times)), Region(qp.space, mask))


def test_identical_and_symmetric():
    qp = _random_process()
    rng = np.random.default_rng(1)
    for _ in range(20):
        s1, s2 = _random_sset(qp, rng), _random_sset(qp, rng)
        assert m_psi(qp, s1, s1) == 1.0
        assert m_psi(qp, s1, s2) == m_psi(qp, s2, s1)
        assert m_psi(qp, s1, s2) <= 1 + 1e-12


def test_equal_time_formula():
    qp = _random_process(seed=2)
    rng = np.random.default_rng(3)
    for _ in range(20):
        s1 = _random_sset(qp, rng, times=(1.2,))
        s2 = _random_sset(qp, rng, times=(1.2,))
        both = qp.weight(SSet(1.2, s1.region & s2.region))
        expected = 2 * both / (qp.weight(s1) + qp.weight(s2))
        assert abs(m_psi(qp, s1, s2) - expected) <= 1e-10


def test_gap_identity():
    qp = _random_process(seed=4)
    rng = np.random.default_rng(5)
    for _ in range(20):
        s1, s2 = _random_sset(qp, rng), _random_sset(qp, rng)
        gap = m_psi_gap(qp, s1, s2)
        assert abs((1 - m_psi(qp, s1, s2)) - gap) <= 1e-12
        diff, total = difference_norm(qp, s1, s2)
        assert abs(diff - gap * total) <= 1e-12


def test_both_weights_vanish():
    qp = _static_process([1, 0])
    empty = Region.empty(qp.space)
    with pytest.raises(BothWeightsVanish):
        m_psi(qp, SSet(0.0, empty), SSet(1.0, empty))


def test_particular_case():
    full_weight = particular_case(_static_process([1, 0]), SSet(0.0, Region.from_labels(ModeSpace(['yes', 'no']), ['yes'])))
    assert full_weight.m_value == 1.0 and full_weight.holds

    qp = _static_process([np.sqrt(0.999), np.sqrt(0.001)])
    verdict = particular_case(qp, SSet(1.0, Region.from_labels(qp.space, ['yes'])), threshold=1e-3)
    assert abs(verdict.m_value - 2 * 0.999 / 1.999) <= 1e-12
    assert verdict.holds

    none = particular_case(_static_process([1, 0]), SSet(0.0, Region.from_labels(qp.space, ['no'])))
    assert none.m_value == 0.0 and not none.holds


def test_verdict_follows_threshold():
    qp = _static_process([np.sqrt(0.999), np.sqrt(0.001)])
    yes = Region.from_labels(qp.space, ['yes'])
    whole = Region.full(qp.space)
    verdict = cournot_verdict(qp, SSet(0.0, whole), SSet(1.0, yes), threshold=1e-3)
    assert verdict.holds and verdict.direction == 'bidirectional'
    assert not cournot_verdict(qp, SSet(0.0, whole), SSet(1.0, yes), threshold=1e-4).holds


def test_consistency_scan_finds_no_anchored_pairs_at_tight_threshold():
    qp = _random_process(n=5, seed=6)
    report = consistency_scan(qp, [0.0, 0.5, 1.0, 2.0], n_pairs=300, threshold=0.1, seed=1)
    assert report.checked == 300
    assert report.anchored == 0
    assert report.passed


def test_consistency_bound_at_loose_threshold():
    qp = _random_process(n=5, seed=7)
    report = consistency_scan(qp, [0.0, 0.5, 1.0, 2.0], n_pairs=300, threshold=0.5, seed=2)
    assert report.bound_holds
    assert report.max_min_m <= DISJOINT_BOUND + 1e-12
    assert report.forced == 0
    assert report.violations == []
    assert report.passed


def test_loose_threshold_anchors_without_forcing():
    qp = _static_process([np.sqrt(0.5), np.sqrt(0.5)])
    yes, no = Region.from_labels(qp.space, ['yes']), Region.from_labels(qp.space, ['no'])
    whole = SSet(0.0, Region.full(qp.space))
    pair = [(SSet(1.0, yes), SSet(1.0, no))]
    # M(X, half) = 2 * 0.5 / 1.5 for both halves
    loose = consistency_probe(qp, whole, pair, threshold=0.5)
    assert loose.anchored == 1
    assert loose.forced == 0
    assert loose.violations == [] and loose.passed
    assert loose.max_min_m == pytest.approx(2 / 3, abs=1e-12)
    tight = consistency_probe(qp, whole, pair, threshold=0.05)
    assert tight.anchored == 0 and tight.passed


def test_complement_anchor_never_anchors_both():
    qp = _random_process(n=4, seed=8)
    s = SSet(1.0, Region.from_labels(qp.space, ['m0', 'm1']))
    candidates = [(s, s.complement())]
    report = consistency_probe(qp, s, candidates, threshold=1e-3)
    assert report.anchored == 0 and report.passed


def test_malformed_candidates():
    qp = _random_process(n=4, seed=9)
    a = Region.from_labels(qp.space, ['m0', 'm1'])
    b = Region.from_labels(qp.space, ['m1', 'm2'])
    s = SSet(0.0, a)
    with pytest.raises(MalformedCandidate):
        consistency_probe(qp, s, [(SSet(1.0, a), SSet(1.0, b))])
    with pytest.raises(MalformedCandidate):
        consistency_probe(qp, s, [(SSet(1.0, a), SSet(2.0, ~a))])


def test_fac_and_j_on_equal_sets():
    qp = _random_process(seed=10)
    s = SSet(1.0, Region.from_labels(qp.space, ['m0', 'm3']))
    assert abs(fac_ratio(qp, s, s) - 1) <= 1e-12
    assert j_residual(qp, s, s) == 0.0
    assert support_condition(qp, s, s) == (0.0, 0.0)


def test_complement_overlap_is_one_minus_fac():
    qp = _random_process(seed=11)
    rng = np.random.default_rng(12)
    for _ in range(10):
        s1, s2 = _random_sset(qp, rng), _random_sset(qp, rng)
        assert abs(complement_overlap(qp, s1, s2) - (1 - fac_ratio(qp, s1, s2))) <= 1e-10


def test_vanishing_weight():
    qp = _static_process([1, 0])
    no = SSet(1.0, Region.from_labels(qp.space, ['no']))
    yes = SSet(0.0, Region.from_labels(qp.space, ['yes']))
    with pytest.raises(VanishingWeight):
        fac_ratio(qp, yes, no)
    with pytest.raises(VanishingWeight):
        j_residual(qp, yes, no)
