#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from scipy import ndimage
from scipy.cluster.hierarchy import DisjointSet
from typing import (List,
                    Optional,
                    Sequence,
                    Set,
                    Tuple)

from qcp.common.exceptions import (GridMismatch,
                                   InvalidTree,
                                   LineageAmbiguous)
from qcp.hilbert import (GridSpace,
                         Region)
from qcp.squant import QuantumProcess
from qcp.tree.structure import (TreeStructure,
                                validate_tree)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

DEFAULT_GAP_SPACINGS = 4
DEFAULT_MASS_FLOOR = 1e-8


class _Component(object):

    __slots__ = ('core', 'reach', 'parents')

    def __init__(self, core: np.ndarray, reach: np.ndarray):
        self.core = core            # support points of the cluster
        self.reach = reach          # dilated cluster, used for lineage
        self.parents = set()


def _clusters(space: GridSpace, density: np.ndarray, gap: Tuple[int, ...], mass_floor: float) -> List[_Component]:
    '''
    Support points whose empty gap along an axis is shorter than `gap`
    grid points end up in one cluster; the grid is periodic.
    '''
    dens = density.reshape(space.shape)
    top = dens.max()
    if top <= 0:
        return []
    support = dens >= mass_floor * top
    reach = ndimage.maximum_filter(support.astype(np.uint8), size=gap, mode='wrap') > 0
    labels, count = ndimage.label(reach)
    ds = DisjointSet(range(1, count + 1))
    for axis in range(space.dimension):
        first = np.atleast_1d(np.take(labels, 0, axis=axis)).ravel()
        last = np.atleast_1d(np.take(labels, -1, axis=axis)).ravel()
        for a, b in zip(first, last):
            if a and b:
                ds.merge(int(a), int(b))
    out = []
    for members in ds.subsets():
        hit = np.isin(labels, list(members))
        out.append(_Component(np.ravel(support & hit), np.ravel(hit)))
    return [c for c in out if c.core.any()]


def _descendants(levels: List[List[_Component]]) -> List[List[Set[int]]]:
    last = len(levels) - 1
    desc = [[set() for _ in level] for level in levels]
    desc[last] = [{i} for i in range(len(levels[last]))]
    for k in range(last, 0, -1):
        for c, comp in enumerate(levels[k]):
            for p in comp.parents:
                desc[k - 1][p] |= desc[k][c]
    return desc


def _class_members(desc_k: List[Set[int]], cls: frozenset) -> frozenset:
    return frozenset(c for c, d in enumerate(desc_k) if d & cls)


def _merge_classes(desc: List[List[Set[int]]], finals: int) -> List[frozenset]:
    '''
    Coarsen the singleton classes of final clusters until the per-time
    cluster sets are disjoint-or-equal and never rejoin (time 0 excluded;
    the root is set afterwards).
    '''
    ds = DisjointSet(range(finals))
    while True:
        classes = [frozenset(s) for s in ds.subsets()]
        members = [[_class_members(d, c) for d in desc] for c in classes]
        merged = False
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                a, b = members[i], members[j]
                split = False
                for k in range(1, len(desc)):
                    if a[k] == b[k]:
                        if split:
                            break
                    elif a[k] & b[k]:
                        break
                    else:
                        split = True
                else:
                    continue
                ds.merge(next(iter(classes[i])), next(iter(classes[j])))
                merged = True
        if not merged:
            return classes


def extract_tree_from_densities(space: GridSpace,
                                time_grid: Sequence[float],
                                densities: Sequence[np.ndarray],
                                gap_threshold: Optional[float] = None,
                                mass_floor: float = DEFAULT_MASS_FLOOR) -> TreeStructure:
    if not isinstance(space, GridSpace):
        raise GridMismatch('tree extraction clusters grid densities only.')
    assert len(time_grid) >= 2, 'extraction needs at least two grid times.'
    assert len(densities) == len(time_grid), 'one density per grid time is required.'
    if gap_threshold is None:
        gap_threshold = DEFAULT_GAP_SPACINGS * max(space.spacing)
    gap = tuple(max(1, int(round(gap_threshold / dx))) for dx in space.spacing)

    levels = []
    for k, (t, dens) in enumerate(zip(time_grid, densities)):
        comps = _clusters(space, np.asarray(dens, dtype=float), gap, mass_floor)
        if k > 0:
            for comp in comps:
                comp.parents = {p for p, prev in enumerate(levels[-1]) if (prev.reach & comp.reach).any()}
                if not comp.parents:
                    raise LineageAmbiguous(f'a cluster at t={t} has no ancestor at t={time_grid[k - 1]}; '
                                           'refine the time grid or widen gap_threshold')
        levels.append(comps)
        logger.debug(f'extract: {len(comps)} clusters at t={t}')

    desc = _descendants(levels)
    classes = _merge_classes(desc, len(levels[-1]))
    root = Region(space, np.logical_or.reduce([c.core for c in levels[0]]))
    branches = []
    for cls in classes:
        regions = [root]
        for k in range(1, len(levels)):
            mask = np.zeros(space.size, dtype=bool)
            for c in _class_members(desc[k], cls):
                mask |= levels[k][c].core
            regions.append(Region(space, mask))
        branches.append(regions)
    branches.sort(key=lambda b: int(np.argmax(b[-1].mask)))
    tree = TreeStructure(time_grid, branches)
    violations = validate_tree(tree)
    if violations:
        raise InvalidTree('extraction produced ' + '; '.join(v.describe() for v in violations[:5]))
    logger.info(f'extracted {tree.n} branch(es) over {len(time_grid)} times')
    return tree


def extract_tree(qp: QuantumProcess,
                 time_grid: Sequence[float],
                 gap_threshold: Optional[float] = None,
                 mass_floor: float = DEFAULT_MASS_FLOOR) -> TreeStructure:
    '''
    Cluster the support of |Psi(t)|^2 on the grid at each time and merge
    cluster lineages into branches. The result satisfies the tree axioms;
    permanence is measured separately by permanence_residuals.
    '''
    densities = [psi.density for psi in qp.snapshots(time_grid)]
    return extract_tree_from_densities(qp.space, time_grid, densities, gap_threshold, mass_floor)
