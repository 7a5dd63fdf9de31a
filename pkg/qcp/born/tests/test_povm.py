import numpy as np
import pytest

from qcp.born import (NEUTRAL,
                      MeasurementModel,
                      bilinear_form,
                      build_povm,
                      direct_probability,
                      ideal_pointer_model,
                      neutral_weight,
                      noisy_pointer_model,
                      outcome_probability,
                      save_povm,
                      spin_model,
                      unrecorded_model)
from qcp.common.exceptions import (NonUnitary,
                                   UnnormalizedState)
from qcp.common.yaml_ops import load_yaml
from qcp.hilbert import (ModeSpace,
                         WaveFunction)


def _random_states(d, count=10, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        a = rng.normal(size=d) + 1j * rng.normal(size=d)
        yield a / np.linalg.norm(a)


def test_ideal_pointer_gives_projectors():
    model = ideal_pointer_model(3)
    povm = build_povm(model)
    for i in range(3):
        expected = np.zeros((3, 3))
        expected[i, i] = 1.0
        assert np.max(np.abs(povm.operator([str(i)]) - expected)) <= 1e-12
    assert np.max(np.abs(povm.operator([NEUTRAL]))) <= 1e-12
    assert povm.completeness_residual <= 1e-10
    e1 = WaveFunction.from_labels(model.micro, {'e1': 1.0})
    assert outcome_probability(povm, ['1'], e1) == pytest.approx(1.0, abs=1e-12)
    assert neutral_weight(model, e1) == pytest.approx(0.0, abs=1e-12)


def test_noisy_pointer_closed_form():
    eta = 0.1
    povm = build_povm(noisy_pointer_model(eta))
    assert np.max(np.abs(povm.operator(['0']) - np.diag([1 - eta, eta]))) <= 1e-12
    assert np.max(np.abs(povm.operator(['1']) - np.diag([eta, 1 - eta]))) <= 1e-12


def test_never_recording_apparatus():
    base = ideal_pointer_model(2)
    model = MeasurementModel(base.micro, base.apparatus, base.coupling, base.outcomes, lambda label: NEUTRAL)
    povm = build_povm(model)
    assert np.max(np.abs(povm.operator([NEUTRAL]) - np.eye(2))) <= 1e-12


def test_unrecorded_leak():
    model = unrecorded_model(0.01)
    build_povm(model)
    for phi in _random_states(2):
        assert neutral_weight(model, phi) == pytest.approx(0.01, abs=1e-12)


@pytest.mark.parametrize('axis_angle', [0.0, 0.4, 1.3])
def test_spin_along_tilted_axis(axis_angle):
    model = spin_model(axis_angle)
    povm = build_povm(model)
    for theta in np.linspace(0, np.pi, 7):
        phi = np.array([np.cos(theta / 2), np.sin(theta / 2)])
        expected = np.cos((theta - axis_angle) / 2) ** 2
        assert outcome_probability(povm, ['+'], phi) == pytest.approx(expected, abs=1e-10)
        assert direct_probability(model, ['+'], phi) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize('model', [ideal_pointer_model(2), noisy_pointer_model(0.3), unrecorded_model(0.2), spin_model(0.7)])
def test_operator_and_direct_readings_agree(model):
    povm = build_povm(model)
    events = [[a] for a in model.atoms] + [list(model.outcomes), list(model.atoms)]
    for phi in _random_states(model.micro.size, seed=4):
        for event in events:
            assert outcome_probability(povm, event, phi) == pytest.approx(direct_probability(model, event, phi), abs=1e-10)
        assert outcome_probability(povm, model.atoms, phi) == pytest.approx(1.0, abs=1e-10)


def test_bilinear_form_matches_operator():
    model = noisy_pointer_model(0.2)
    povm = build_povm(model)
    phi, varphi = list(_random_states(2, count=2, seed=9))
    assert bilinear_form(model, ['0'], phi, varphi) == pytest.approx(np.vdot(phi, povm.operator(['0']) @ varphi), abs=1e-12)


def test_preconditions():
    povm = build_povm(ideal_pointer_model(2))
    with pytest.raises(UnnormalizedState):
        outcome_probability(povm, ['0'], np.array([1.0, 1.0]))
    base = ideal_pointer_model(2)
    with pytest.raises(NonUnitary):
        MeasurementModel(base.micro, base.apparatus, 2 * base.coupling, base.outcomes, lambda label: NEUTRAL)


def test_save_povm(tmp_path):
    povm = build_povm(noisy_pointer_model(0.1))
    path = str(tmp_path / 'povm.yaml')
    save_povm(path, povm)
    data = load_yaml(path)
    assert data['dimension'] == 2
    assert data['operators']['0'][0] == [pytest.approx(0.9), pytest.approx(0.0)]
    assert len(data['operators'][NEUTRAL]) == 4
