#!/usr/bin/env python3
# encoding: utf-8

import numpy as np
import scipy.fft as sfft

from scipy.special import erfc
from typing import (Dict,
                    Hashable,
                    Sequence,
                    Union)

from qcp.common.decorator import lazy_property
from qcp.common.exceptions import (PacketClipped,
                                   PacketTooNarrow,
                                   SpaceMismatch)
from qcp.hilbert.region import Region
from qcp.hilbert.spaces import (GridSpace,
                                ModeSpace,
                                Space)
from qcp.utils.np_utils import (norm_squared,
                                readonly)

CLIP_TOLERANCE = 1e-10


class WaveFunction(object):
    '''
    Complex amplitudes over a space at a time tag. Grid amplitudes are the
    discrete coefficients, so |a_j|^2 is the probability of grid cell j.
    '''

    def __init__(self, space: Space, amplitudes: np.ndarray, time: float = 0.0):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).ravel()
        assert amplitudes.shape == (space.size,), f'{amplitudes.size} amplitudes for a space of size {space.size}.'
        self.space = space
        self.amplitudes = readonly(amplitudes)
        self.time = float(time)

    @classmethod
    def from_labels(cls, space: ModeSpace, amplitudes: Dict[Hashable, complex], time: float = 0.0) -> 'WaveFunction':
        a = np.zeros(space.size, dtype=np.complex128)
        for label, v in amplitudes.items():
            a[space.index(label)] = v
        return cls(space, a, time)

    @classmethod
    def uniform(cls, space: Space, time: float = 0.0) -> 'WaveFunction':
        return cls(space, np.full(space.size, 1 / np.sqrt(space.size), dtype=np.complex128), time)

    @lazy_property
    def norm_squared(self) -> float:
        return norm_squared(self.amplitudes)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared))

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_squared - 1) <= 1e-10

    def normalize(self) -> 'WaveFunction':
        assert self.norm_squared > 0, 'cannot normalize the zero vector.'
        return WaveFunction(self.space, self.amplitudes / self.norm, self.time)

    def replace(self, amplitudes: np.ndarray = None, time: float = None) -> 'WaveFunction':
        return WaveFunction(self.space,
                            self.amplitudes if amplitudes is None else amplitudes,
                            self.time if time is None else time)

    def amplitude(self, label: Hashable) -> complex:
        return complex(self.amplitudes[self.space.index(label)])

    def position_mean(self) -> np.ndarray:
        '''
        <Q> per axis, normalized by the state norm
        '''
        assert isinstance(self.space, GridSpace), '<Q> needs a grid.'
        rho = self.density
        return np.array([np.dot(x, rho) for x in self.space.coordinates]) / rho.sum()

    def momentum_mean(self) -> np.ndarray:
        '''
        <P> per axis (hbar = 1), from the discrete Fourier transform
        '''
        assert isinstance(self.space, GridSpace), '<P> needs a grid.'
        phi = sfft.fftn(self.amplitudes.reshape(self.space.shape))
        rho = (np.abs(phi) ** 2).ravel()
        return np.array([np.dot(k, rho) for k in self.space.wavenumbers]) / rho.sum()

    def __repr__(self):
        return f'WaveFunction({self.space!r}, t={self.time}, norm2={self.norm_squared:.12g})'


def _check_same_space(a, b):
    if a.space != b.space:
        raise SpaceMismatch(f'{a.space!r} vs {b.space!r}')


def gaussian_packet(space: GridSpace,
                    center: Union[float, Sequence[float]],
                    width: float,
                    momentum: Union[float, Sequence[float]] = 0.0) -> WaveFunction:
    '''
    Normalized Gaussian packet at time 0.
    params:
        center: <Q> per axis
        width: standard deviation of |psi|^2 per axis
        momentum: <P> per axis
    '''
    assert isinstance(space, GridSpace), 'Gaussian packets live on grids.'
    center = np.broadcast_to(np.asarray(center, dtype=float), (space.dimension,))
    momentum = np.broadcast_to(np.asarray(momentum, dtype=float), (space.dimension,))
    if width <= 2 * max(space.spacing):
        raise PacketTooNarrow(f'width {width} is not resolved by spacing {max(space.spacing)}')

    inside = 1.0
    for c, lo, hi in zip(center, space.lower, space.upper):
        outside = 0.5 * erfc((c - lo) / (width * np.sqrt(2))) + 0.5 * erfc((hi - c) / (width * np.sqrt(2)))
        inside *= 1 - outside
    if 1 - inside > CLIP_TOLERANCE:
        raise PacketClipped(f'tail mass {1 - inside:.3e} outside the grid exceeds {CLIP_TOLERANCE}')

    log_amp = np.zeros(space.size, dtype=np.complex128)
    for x, c, p in zip(space.coordinates, center, momentum):
        log_amp += -(x - c) ** 2 / (4 * width ** 2) + 1j * p * (x - c)
    a = np.exp(log_amp)
    return WaveFunction(space, a / np.sqrt(norm_squared(a)), 0.0)


def project(psi: WaveFunction, region: Region) -> WaveFunction:
    '''
    E(region) psi; the result is sub-normalized in general.
    '''
    _check_same_space(psi, region)
    return psi.replace(amplitudes=np.where(region.mask, psi.amplitudes, 0))


def inner(psi1: WaveFunction, psi2: WaveFunction) -> complex:
    '''
    <psi1|psi2>, antilinear in the first argument
    '''
    _check_same_space(psi1, psi2)
    return complex(np.vdot(psi1.amplitudes, psi2.amplitudes))


def tensor(psi1: WaveFunction, psi2: WaveFunction) -> WaveFunction:
    assert isinstance(psi1.space, ModeSpace) and isinstance(psi2.space, ModeSpace)
    return WaveFunction(ModeSpace.product(psi1.space, psi2.space),
                        np.kron(psi1.amplitudes, psi2.amplitudes),
                        psi1.time)
