import numpy as np
import pytest

from qcp.utils.np_utils import (is_power_of_two,
                                max_abs_diff,
                                norm_squared,
                                readonly,
                                real_overlap,
                                unitarity_defect)


def test_power_of_two():
    assert is_power_of_two(1024)
    assert not is_power_of_two(0)
    assert not is_power_of_two(96)


def test_real_overlap_is_symmetric():
    rng = np.random.default_rng(0)
    a = rng.normal(size=64) + 1j * rng.normal(size=64)
    b = rng.normal(size=64) + 1j * rng.normal(size=64)
    assert real_overlap(a, b) == real_overlap(b, a)
    assert abs(real_overlap(a, b) - np.vdot(a, b).real) <= 1e-12
    assert abs(norm_squared(a) - np.linalg.norm(a) ** 2) <= 1e-10


def test_unitarity_defect():
    assert unitarity_defect(np.array([[0, 1j], [1j, 0]])) == 0.0
    assert unitarity_defect(np.diag([1.0, 1.1])) == pytest.approx(0.21)
    assert max_abs_diff(np.array([]), np.array([])) == 0.0


def test_readonly_copies():
    a = np.zeros(3)
    b = readonly(a)
    a[0] = 1
    assert b[0] == 0
    with pytest.raises(ValueError):
        b[0] = 2
