#!/usr/bin/env python3
# encoding: utf-8

from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from qcp.hilbert import Region


@dataclass(frozen=True)
class SSet:
    '''
    Single-time cylinder set: the trajectories found in `region` at `time`.
    '''
    time: float
    region: Region

    def complement(self) -> 'SSet':
        return SSet(self.time, ~self.region)

    def describe(self) -> str:
        return f'(t={self.time:g}, {self.region!r})'


@dataclass(frozen=True)
class ProductSSet:
    '''
    (t, region_1 x ... x region_n) on a product of processes.
    '''
    time: float
    regions: Tuple[Region, ...]

    @classmethod
    def of(cls, *ssets: SSet) -> 'ProductSSet':
        times = {round(s.time, 9) for s in ssets}
        assert len(times) == 1, f'product s-sets need a common time, got {sorted(times)}.'
        return cls(ssets[0].time, tuple(s.region for s in ssets))

    def factor(self, i: int) -> SSet:
        return SSet(self.time, self.regions[i])

    def concrete(self) -> SSet:
        '''
        the same s-set on the materialized tensor-product mode space
        '''
        return SSet(self.time, reduce(Region.product, self.regions))
