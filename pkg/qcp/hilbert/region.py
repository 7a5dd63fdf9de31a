#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Callable,
                    Hashable,
                    Iterable,
                    List,
                    Sequence,
                    Tuple)

from qcp.common.exceptions import SpaceMismatch
from qcp.hilbert.spaces import (GridSpace,
                                ModeSpace,
                                Space)


class Region(object):
    '''
    A subset of the configuration space as an exact boolean mask.
    Regions are immutable; set operations return new regions.
    '''

    def __init__(self, space: Space, mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool).ravel()
        assert mask.shape == (space.size,), f'mask length {mask.size} != space size {space.size}.'
        mask = mask.copy()
        mask.setflags(write=False)
        self.space = space
        self.mask = mask
        self.key = (hash(space), np.packbits(mask).tobytes())

    @classmethod
    def full(cls, space: Space) -> 'Region':
        return cls(space, np.ones(space.size, dtype=bool))

    @classmethod
    def empty(cls, space: Space) -> 'Region':
        return cls(space, np.zeros(space.size, dtype=bool))

    @classmethod
    def from_labels(cls, space: ModeSpace, labels: Iterable[Hashable]) -> 'Region':
        mask = np.zeros(space.size, dtype=bool)
        for l in labels:
            mask[space.index(l)] = True
        return cls(space, mask)

    @classmethod
    def from_predicate(cls, space: Space, predicate: Callable) -> 'Region':
        '''
        mode spaces: predicate(label) -> bool for every label
        grid spaces: predicate(*coordinates) -> boolean array over the flat grid
        '''
        if isinstance(space, ModeSpace):
            return cls(space, np.fromiter((bool(predicate(l)) for l in space.labels), dtype=bool, count=space.size))
        return cls(space, np.asarray(predicate(*space.coordinates), dtype=bool))

    @classmethod
    def from_intervals(cls, space: GridSpace, intervals: Sequence) -> 'Region':
        '''
        1D: [(a, b), ...] selects a <= x < b
        2D: [((ax, bx), (ay, by)), ...] selects boxes
        '''
        assert isinstance(space, GridSpace), 'intervals only make sense on grids.'
        mask = np.zeros(space.size, dtype=bool)
        coords = space.coordinates
        for box in intervals:
            if space.dimension == 1:
                box = (box,)
            inside = np.ones(space.size, dtype=bool)
            for (a, b), x in zip(box, coords):
                inside &= (x >= a) & (x < b)
            mask |= inside
        return cls(space, mask)

    @classmethod
    def from_runs(cls, space: Space, runs: Sequence[Sequence[int]]) -> 'Region':
        mask = np.zeros(space.size, dtype=bool)
        for start, stop in runs:
            mask[int(start):int(stop)] = True
        return cls(space, mask)

    @classmethod
    def product(cls, a: 'Region', b: 'Region') -> 'Region':
        assert isinstance(a.space, ModeSpace) and isinstance(b.space, ModeSpace), \
            'concrete product regions exist for mode spaces only.'
        return cls(ModeSpace.product(a.space, b.space), np.outer(a.mask, b.mask).ravel())

    def runs(self) -> List[Tuple[int, int]]:
        '''
        maximal [start, stop) index runs of the flat mask
        '''
        padded = np.concatenate([[False], self.mask, [False]]).astype(np.int8)
        edges = np.flatnonzero(np.diff(padded))
        return [(int(s), int(e)) for s, e in zip(edges[::2], edges[1::2])]

    def labels(self) -> Tuple[Hashable, ...]:
        assert isinstance(self.space, ModeSpace)
        return tuple(l for l, m in zip(self.space.labels, self.mask) if m)

    @property
    def count(self) -> int:
        return int(self.mask.sum())

    def is_empty(self) -> bool:
        return not self.mask.any()

    def is_full(self) -> bool:
        return bool(self.mask.all())

    def _check(self, other: 'Region'):
        if self.space != other.space:
            raise SpaceMismatch(f'regions live on different spaces: {self.space} vs {other.space}')

    def is_disjoint(self, other: 'Region') -> bool:
        self._check(other)
        return not np.any(self.mask & other.mask)

    def issubset(self, other: 'Region') -> bool:
        self._check(other)
        return not np.any(self.mask & ~other.mask)

    def __and__(self, other):
        self._check(other)
        return Region(self.space, self.mask & other.mask)

    def __or__(self, other):
        self._check(other)
        return Region(self.space, self.mask | other.mask)

    def __sub__(self, other):
        self._check(other)
        return Region(self.space, self.mask & ~other.mask)

    def __invert__(self):
        return Region(self.space, ~self.mask)

    def complement(self) -> 'Region':
        return ~self

    def __eq__(self, other):
        return isinstance(other, Region) and self.key == other.key and self.space == other.space

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if isinstance(self.space, ModeSpace) and len(self.space.factors) == 1:
            return f'Region({list(self.labels())})'
        return f'Region({self.count}/{self.space.size} points)'


def union(regions: Iterable[Region]) -> Region:
    regions = list(regions)
    assert regions, 'union of an empty family needs a space.'
    mask = np.zeros(regions[0].space.size, dtype=bool)
    for r in regions:
        regions[0]._check(r)
        mask |= r.mask
    return Region(regions[0].space, mask)
