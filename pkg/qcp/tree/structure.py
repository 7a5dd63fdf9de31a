#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from dataclasses import dataclass
from typing import (Any,
                    Dict,
                    List,
                    Sequence,
                    Tuple)

from qcp.common.yaml_ops import (load_yaml,
                                 save_yaml)
from qcp.hilbert import (ModeSpace,
                         Region,
                         union)
from qcp.hilbert.spaces import Space
from qcp.squant import SSet

AXIOMS = ('disjoint_or_equal', 'no_rejoin', 'common_root', 'full_split')


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    times: Tuple[float, ...]
    branches: Tuple[int, ...]

    def describe(self) -> str:
        return f'{self.axiom} at t={list(self.times)} for branches {list(self.branches)}'


@dataclass(frozen=True)
class BranchPartition:
    '''
    Branches grouped by their common region at grid time index `k`:
    the groups are the index sets I^s_1 ... I^s_n.
    '''
    k: int
    groups: Tuple[Tuple[int, ...], ...]


class TreeStructure(object):
    '''
    n branch maps from the time grid to regions; branches[i][k] is the
    region of branch i at time_grid[k].
    '''

    def __init__(self, time_grid: Sequence[float], branches: Sequence[Sequence[Region]]):
        self.time_grid = tuple(float(t) for t in time_grid)
        self.branches = [list(b) for b in branches]
        assert self.branches, 'a tree needs at least one branch.'
        assert all(np.diff(self.time_grid) > 0), 'the time grid must be increasing.'
        for i, b in enumerate(self.branches):
            assert len(b) == len(self.time_grid), f'branch {i} has {len(b)} regions for {len(self.time_grid)} times.'
        self.space = self.branches[0][0].space
        assert all(r.space == self.space for b in self.branches for r in b), 'all regions must share one space.'

    @property
    def n(self) -> int:
        return len(self.branches)

    def region(self, i: int, k: int) -> Region:
        return self.branches[i][k]

    def partition_at(self, k: int) -> BranchPartition:
        groups = {}
        for i in range(self.n):
            groups.setdefault(self.branches[i][k].key, []).append(i)
        return BranchPartition(k, tuple(sorted(tuple(g) for g in groups.values())))

    def sigma(self, group: Sequence[int], k: int) -> Region:
        '''
        Sigma(t_k): the union of the member branches' regions at t_k
        '''
        return union(self.branches[i][k] for i in group)

    def split_time(self, i: int, j: int) -> float:
        '''
        first grid time at which branches i and j differ (inf if never)
        '''
        for k, t in enumerate(self.time_grid):
            if self.branches[i][k] != self.branches[j][k]:
                return t
        return float('inf')

    def support(self, k: int) -> Region:
        return union(b[k] for b in self.branches)

    def branch_weights(self, qp) -> np.ndarray:
        '''
        (n, times) array of P_t(branch region)
        '''
        return np.array([[qp.weight(SSet(t, b[k])) for k, t in enumerate(self.time_grid)] for b in self.branches])

    def indicator_densities(self) -> List[np.ndarray]:
        return [self.support(k).mask.astype(float) for k in range(len(self.time_grid))]

    def to_dict(self) -> Dict[str, Any]:
        def encode(r: Region):
            if isinstance(self.space, ModeSpace):
                return {'labels': [str(l) for l in r.labels()]}
            return {'runs': [list(run) for run in r.runs()]}
        return {'time_grid': list(self.time_grid),
                'space': self.space.describe(),
                'branches': [[encode(r) for r in b] for b in self.branches]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any], space: Space) -> 'TreeStructure':
        by_name = {str(l): l for l in space.labels} if isinstance(space, ModeSpace) else {}

        def decode(d):
            if 'labels' in d:
                return Region.from_labels(space, [by_name[l] for l in d['labels']])
            return Region.from_runs(space, d['runs'])
        return cls(data['time_grid'], [[decode(d) for d in b] for b in data['branches']])

    def __eq__(self, other):
        return isinstance(other, TreeStructure) and self.time_grid == other.time_grid \
            and self.branches == other.branches

    def __repr__(self):
        return f'TreeStructure(n={self.n}, times={len(self.time_grid)})'


def validate_tree(tree: TreeStructure) -> List[AxiomViolation]:
    '''
    Exact mask checks of the four tree axioms; an empty list means a valid tree.
    '''
    out = []
    times, last = tree.time_grid, len(tree.time_grid) - 1
    b = tree.branches
    for i in range(tree.n):
        for j in range(i + 1, tree.n):
            for k, t in enumerate(times):
                if b[i][k] != b[j][k] and not b[i][k].is_disjoint(b[j][k]):
                    out.append(AxiomViolation('disjoint_or_equal', (t,), (i, j)))
            equal = [b[i][k] == b[j][k] for k in range(len(times))]
            for k in range(len(times) - 1, 0, -1):
                if equal[k] and not all(equal[:k]):
                    s = equal.index(False)
                    out.append(AxiomViolation('no_rejoin', (times[s], times[k]), (i, j)))
                    break
            if not equal[0]:
                out.append(AxiomViolation('common_root', (times[0],), (i, j)))
            if not b[i][last].is_disjoint(b[j][last]):
                out.append(AxiomViolation('full_split', (times[last],), (i, j)))
    return out


def save_tree(filepath: str, tree: TreeStructure):
    save_yaml(filepath, tree.to_dict())


def load_tree(filepath: str, space: Space) -> TreeStructure:
    return TreeStructure.from_dict(load_yaml(filepath), space)
