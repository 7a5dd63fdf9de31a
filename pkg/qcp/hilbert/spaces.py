#!/usr/bin/env python3
# encoding: utf-8

import numpy as np
import scipy.fft as sfft

from typing import (Any,
                    Dict,
                    Hashable,
                    Sequence,
                    Tuple,
                    Union)

from qcp.common.decorator import lazy_property
from qcp.utils.np_utils import (is_power_of_two,
                                readonly)


class GridSpace(object):
    '''
    Uniform periodic grid in one or two dimensions.
    Amplitudes on the grid are stored flat (row-major over `shape`).
    '''
    kind = 'grid'

    def __init__(self,
                 extent: Union[float, Sequence[float]],
                 points: Union[int, Sequence[int]],
                 lower: Union[float, Sequence[float], None] = None):
        extent = tuple(float(e) for e in np.atleast_1d(extent))
        points = tuple(int(p) for p in np.atleast_1d(points))
        if len(points) == 1 and len(extent) > 1:
            points = points * len(extent)
        assert len(extent) in (1, 2), 'only 1D and 2D grids are supported.'
        assert len(points) == len(extent), 'points and extent must have one entry per axis.'
        for p in points:
            assert p >= 8 and is_power_of_two(p), f'points per axis must be a power of two >= 8, got {p}.'
        for e in extent:
            assert e > 0, f'extent must be positive, got {e}.'
        if lower is None:
            lower = tuple(-e / 2 for e in extent)
        lower = tuple(float(l) for l in np.atleast_1d(lower))
        assert len(lower) == len(extent)

        self.extent = extent
        self.points = points
        self.lower = lower
        self.dimension = len(extent)
        self.shape = points
        self.size = int(np.prod(points))
        self.spacing = tuple(e / p for e, p in zip(extent, points))
        self.dims = (self.size,)

    @property
    def upper(self) -> Tuple[float, ...]:
        return tuple(l + e for l, e in zip(self.lower, self.extent))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @lazy_property
    def axes(self) -> Tuple[np.ndarray, ...]:
        return tuple(readonly(l + d * np.arange(p)) for l, d, p in zip(self.lower, self.spacing, self.points))

    @lazy_property
    def coordinates(self) -> Tuple[np.ndarray, ...]:
        '''
        flat coordinate arrays, one per axis
        '''
        mesh = np.meshgrid(*self.axes, indexing='ij')
        return tuple(readonly(m.ravel()) for m in mesh)

    @lazy_property
    def wavenumbers(self) -> Tuple[np.ndarray, ...]:
        '''
        flat momentum arrays (hbar = 1) in fft ordering, one per axis
        '''
        ks = [2 * np.pi * sfft.fftfreq(p, d) for p, d in zip(self.points, self.spacing)]
        mesh = np.meshgrid(*ks, indexing='ij')
        return tuple(readonly(m.ravel()) for m in mesh)

    def describe(self) -> Dict[str, Any]:
        return dict(kind=self.kind, extent=list(self.extent), points=list(self.points), lower=list(self.lower))

    def _key(self):
        return (self.kind, self.extent, self.points, self.lower)

    def __eq__(self, other):
        return isinstance(other, GridSpace) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'GridSpace(extent={self.extent}, points={self.points}, lower={self.lower})'


class ModeSpace(object):
    '''
    Finite orthonormal basis of named modes. Product spaces keep their factor
    label lists so that regions can be described factor by factor; a product
    label is the flat tuple of its factor labels.
    '''
    kind = 'mode'

    def __init__(self, labels: Sequence[Hashable], factors: Sequence[Sequence[Hashable]] = None):
        labels = tuple(labels)
        assert len(labels) >= 2, 'a mode space needs at least two modes.'
        assert len(set(labels)) == len(labels), f'mode labels must be unique: {labels}'
        self.labels = labels
        self.size = len(labels)
        self.factors = tuple(tuple(f) for f in factors) if factors is not None else (labels,)
        self.dims = tuple(len(f) for f in self.factors)
        assert int(np.prod(self.dims)) == self.size
        self._index = {l: i for i, l in enumerate(labels)}

    @classmethod
    def product(cls, a: 'ModeSpace', b: 'ModeSpace') -> 'ModeSpace':
        labels = tuple(a._flat(x) + b._flat(y) for x in a.labels for y in b.labels)
        return cls(labels, factors=a.factors + b.factors)

    def _flat(self, label) -> tuple:
        return tuple(label) if len(self.factors) > 1 else (label,)

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f'unknown mode label: {label!r}')

    def factor_index(self, axis: int, label: Hashable) -> int:
        return self.factors[axis].index(label)

    def describe(self) -> Dict[str, Any]:
        return dict(kind=self.kind, factors=[list(map(str, f)) for f in self.factors])

    def _key(self):
        return (self.kind, self.labels)

    def __eq__(self, other):
        return isinstance(other, ModeSpace) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if len(self.factors) > 1:
            return f'ModeSpace(dims={self.dims})'
        return f'ModeSpace({list(self.labels)})'


Space = Union[GridSpace, ModeSpace]
