import numpy as np
import pytest
import scipy.fft as sfft

from qcp.common.exceptions import SpaceMismatch
from qcp.hilbert import (GridSpace,
                         ModeSpace,
                         Region)


def test_grid_space_spacing_and_axes():
    space = GridSpace(40.0, 512)
    assert space.dimension == 1
    assert space.spacing == (40.0 / 512,)
    assert space.axes[0][0] == -20.0
    assert space.size == 512
    plane = GridSpace((8.0, 4.0), 16)
    assert plane.shape == (16, 16)
    assert plane.coordinates[1].shape == (256,)


def test_wavenumbers_follow_fft_ordering():
    space = GridSpace(40.0, 512)
    k = space.wavenumbers[0]
    assert np.array_equal(k, 2 * np.pi * sfft.fftfreq(512, 40.0 / 512))
    assert k[0] == 0.0 and k[256] < 0
    assert abs(k[1] - 2 * np.pi / 40.0) <= 1e-12
    plane = GridSpace((8.0, 4.0), 16)
    assert np.allclose(np.unique(plane.wavenumbers[1]), np.sort(2 * np.pi * sfft.fftfreq(16, 4.0 / 16)))


def test_grid_space_rejects_bad_points():
    with pytest.raises(AssertionError):
        GridSpace(10.0, 100)
    with pytest.raises(AssertionError):
        GridSpace(10.0, 4)


def test_mode_space_product_is_associative():
    a, b, c = ModeSpace(['a0', 'a1']), ModeSpace(['b0', 'b1', 'b2']), ModeSpace(['c0', 'c1'])
    left = ModeSpace.product(ModeSpace.product(a, b), c)
    right = ModeSpace.product(a, ModeSpace.product(b, c))
    assert left == right
    assert left.labels[0] == ('a0', 'b0', 'c0')
    assert left.dims == (2, 3, 2)


def test_mode_space_needs_unique_labels():
    with pytest.raises(AssertionError):
        ModeSpace(['x', 'x'])
    with pytest.raises(AssertionError):
        ModeSpace(['only'])


def test_region_algebra_is_exact():
    space = GridSpace(16.0, 64)
    rng = np.random.default_rng(0)
    r1 = Region(space, rng.random(64) < 0.5)
    r2 = Region(space, rng.random(64) < 0.5)
    assert ~~r1 == r1
    assert (r1 & ~r1).is_empty()
    assert (r1 | ~r1).is_full()
    assert (r1 - r2) == (r1 & ~r2)
    assert (r1 & r2).issubset(r1)


def test_region_from_intervals_and_runs():
    space = GridSpace(40.0, 512)
    left = Region.from_intervals(space, [(-20.0, 0.0)])
    assert left.count == 256
    assert left.runs() == [(0, 256)]
    assert Region.from_runs(space, left.runs()) == left
    plane = GridSpace((8.0, 8.0), 16)
    box = Region.from_intervals(plane, [((-4.0, 0.0), (-4.0, 4.0))])
    assert box.count == 128


def test_region_space_mismatch():
    a = Region.full(ModeSpace(['x', 'y']))
    b = Region.full(ModeSpace(['x', 'z']))
    with pytest.raises(SpaceMismatch):
        a & b


def test_product_region_mask_matches_kron():
    a, b = ModeSpace(['u', 'l']), ModeSpace(['r', 's', 't'])
    ra = Region.from_labels(a, ['l'])
    rb = Region.from_labels(b, ['r', 't'])
    prod = Region.product(ra, rb)
    assert prod.labels() == (('l', 'r'), ('l', 't'))
    assert np.array_equal(prod.mask, np.kron(ra.mask, rb.mask).astype(bool))
