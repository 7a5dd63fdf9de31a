#!/usr/bin/env python3
# encoding: utf-8

import csv
import numpy as np

from concurrent.futures import ThreadPoolExecutor
from scipy import sparse
from scipy.optimize import linprog
from tqdm import trange
from typing import (List,
                    Optional,
                    Sequence)

from qcp.common.exceptions import (MarginalMismatch,
                                   TimeOffGrid,
                                   UnknownMethod)
from qcp.hilbert import (GridSpace,
                         Region)
from qcp.squant import (QuantumProcess,
                        SSet)
from qcp.utils.np_utils import readonly
from qcp.utils.sundry_utils import (chunk_slices,
                                    make_rng)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

METHODS = ('monotone', 'independent')
ENSEMBLE_STREAM = 11
MARGINAL_TOLERANCE = 1e-9
# couplings never move mass between modes whose cross M_Psi is at or below this
TRANSPORT_THRESHOLD = 1e-6
bar_format = '{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}]'


class TrajectoryEnsemble(object):
    '''
    Sampled trajectories on a time grid; positions[i, k] is the flat index
    (grid point or mode) of trajectory i at time_grid[k].
    '''

    def __init__(self, time_grid: Sequence[float], positions: np.ndarray, seed: Optional[int] = None, method: str = ''):
        positions = np.asarray(positions, dtype=np.int64)
        time_grid = np.asarray(time_grid, dtype=float)
        assert positions.ndim == 2 and positions.shape[1] == time_grid.size, \
            f'positions {positions.shape} do not match {time_grid.size} grid times.'
        assert positions.shape[0] >= 1, 'an ensemble needs at least one trajectory.'
        self.time_grid = readonly(time_grid)
        self.positions = readonly(positions)
        self.seed = seed
        self.method = method

    @property
    def count(self) -> int:
        return self.positions.shape[0]

    def time_index(self, t: float) -> int:
        hits = np.flatnonzero(np.isclose(self.time_grid, t, rtol=0, atol=1e-9))
        if hits.size == 0:
            raise TimeOffGrid(f'time {t} is not on the ensemble grid')
        return int(hits[0])

    def indicator(self, s: SSet) -> np.ndarray:
        '''
        per-trajectory membership of the s-set
        '''
        return s.region.mask[self.positions[:, self.time_index(s.time)]]

    def frequency(self, s: SSet) -> float:
        return float(np.mean(self.indicator(s)))

    def joint_frequency(self, s1: SSet, s2: SSet) -> float:
        '''
        f(S1 & S2). For different times this depends on the sampling method,
        it is not a prediction of the process.
        '''
        return float(np.mean(self.indicator(s1) & self.indicator(s2)))

    def to_csv(self, filepath: str):
        with open(filepath, 'w', newline='') as f:
            w = csv.writer(f)
            w.writerow([f'{t:.17g}' for t in self.time_grid])
            w.writerows(self.positions.tolist())

    @classmethod
    def from_csv(cls, filepath: str, seed: Optional[int] = None, method: str = '') -> 'TrajectoryEnsemble':
        with open(filepath, 'r', newline='') as f:
            rows = list(csv.reader(f))
        return cls([float(t) for t in rows[0]], np.array(rows[1:], dtype=np.int64), seed, method)

    def __repr__(self):
        return f'TrajectoryEnsemble(count={self.count}, times={self.time_grid.size}, method={self.method!r})'


def _marginals(qp: QuantumProcess, time_grid: Sequence[float]) -> List[np.ndarray]:
    out = []
    for t in time_grid:
        rho = qp.state_at(t).density
        out.append(rho / rho.sum())
    return out


def _cdf(p: np.ndarray) -> np.ndarray:
    c = np.cumsum(p)
    return c / c[-1]


def _inverse_cdf(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
    return np.minimum(np.searchsorted(cdf, u, side='right'), cdf.size - 1)


def _rescale(pi: np.ndarray, p: np.ndarray, q: np.ndarray, iterations: int) -> Optional[np.ndarray]:
    '''
    alternate row and column scaling until both marginals hold
    '''
    pi = pi.copy()
    for _ in range(iterations):
        rows = pi.sum(axis=1)
        pi *= np.divide(p, rows, out=np.zeros_like(p), where=rows > 0)[:, None]
        cols = pi.sum(axis=0)
        pi *= np.divide(q, cols, out=np.zeros_like(q), where=cols > 0)[None, :]
        defect = max(np.max(np.abs(pi.sum(axis=1) - p)), np.max(np.abs(pi.sum(axis=0) - q)))
        if defect <= MARGINAL_TOLERANCE:
            return pi
    return None


def _linear_coupling(allowed: np.ndarray, cost: np.ndarray, p: np.ndarray, q: np.ndarray) -> Optional[np.ndarray]:
    '''
    cheapest coupling supported on `allowed`, or None when there is none
    '''
    i, j = np.nonzero(allowed)
    n, m = allowed.shape
    k = np.arange(i.size)
    a_eq = sparse.vstack([sparse.coo_matrix((np.ones(i.size), (i, k)), shape=(n, i.size)),
                          sparse.coo_matrix((np.ones(i.size), (j, k)), shape=(m, i.size))])
    res = linprog(cost[i, j], A_eq=a_eq.tocsr(), b_eq=np.concatenate([p, q]), bounds=(0, None), method='highs')
    if res.status != 0:
        return None
    pi = np.zeros(allowed.shape)
    pi[i, j] = np.maximum(res.x, 0)
    return pi


def transport_coupling(qp: QuantumProcess, t0: float, t1: float, threshold: float = TRANSPORT_THRESHOLD,
                       iterations: int = 2000) -> np.ndarray:
    '''
    Joint law pi[i, j] of (mode i at t0, mode j at t1) with the Born marginals.
    Starts from the flux G[i, j] = Re(conj(U_ji psi_i) psi'_j), whose M_Psi
    between the one-mode s-sets is 2 G / (p_i + p'_j), keeps only the entries
    above `threshold` and rescales rows and columns until the marginals match.
    When rescaling stalls, the cheapest coupling on the same support
    (cost 1 - M_Psi) is solved for and polished.
    '''
    psi0 = qp.state_at(t0).amplitudes
    u = qp.propagator.evolve_array(np.diag(psi0), t0, t1 - t0)   # column i is U (psi_i e_i)
    psi1 = qp.state_at(t1).amplitudes
    flux = (np.conj(u) * psi1[:, None]).real.T                   # (i, j)
    p, q = np.abs(psi0) ** 2, np.abs(psi1) ** 2
    p, q = p / p.sum(), q / q.sum()
    with np.errstate(divide='ignore', invalid='ignore'):
        m = 2 * flux / (p[:, None] + q[None, :])
    allowed = m > threshold

    pi = _rescale(np.where(allowed, flux, 0.0), p, q, iterations)
    if pi is None:
        logger.debug(f'flux rescaling stalled for {t0:g} -> {t1:g}, solving the linear coupling')
        pi = _linear_coupling(allowed, np.where(allowed, 1 - m, 0.0), p, q)
        if pi is not None:
            pi = _rescale(pi, p, q, iterations)
    if pi is None:
        raise MarginalMismatch(f'no coupling {t0:g} -> {t1:g} on the allowed transitions matches the marginals '
                               f'within {MARGINAL_TOLERANCE}')
    return pi


def _sample_chunk(seed, c, n, method, cdfs, transitions, grid):
    rng = make_rng(seed, ENSEMBLE_STREAM, c)
    times = len(cdfs)
    out = np.empty((n, times), dtype=np.int64)
    if method == 'independent':
        u = rng.random((n, times))
        for k, cdf in enumerate(cdfs):
            out[:, k] = _inverse_cdf(cdf, u[:, k])
    elif grid:
        # comonotone coupling: one quantile per trajectory
        u = rng.random(n)
        for k, cdf in enumerate(cdfs):
            out[:, k] = _inverse_cdf(cdf, u)
    else:
        out[:, 0] = _inverse_cdf(cdfs[0], rng.random(n))
        for k, cum in enumerate(transitions):
            u = rng.random(n)
            rows = cum[out[:, k]]
            out[:, k + 1] = np.minimum((rows <= u[:, None]).sum(axis=1), rows.shape[1] - 1)
    return out


def build_compatible_ensemble(qp: QuantumProcess,
                              time_grid: Sequence[float],
                              count: int,
                              seed: int,
                              method: str = 'monotone',
                              workers: int = 1,
                              chunk_size: int = 10000,
                              threshold: float = TRANSPORT_THRESHOLD,
                              progress: bool = False) -> TrajectoryEnsemble:
    '''
    Sample a stochastic process whose single-time marginals are the Born weights.
    params:
        method: 'independent' resamples every time from |Psi(t)|^2 with no memory;
                'monotone' couples consecutive times by matching cumulative
                distributions on grids and by the thresholded flux coupling on mode spaces
        workers: threads over chunks; chunk c always uses stream (seed, c)
    '''
    if method not in METHODS:
        raise UnknownMethod(f'unknown ensemble method {method!r}, expected one of {METHODS}')
    assert count >= 1, 'count must be positive.'
    time_grid = [qp.check_time(t) for t in time_grid]
    cdfs = [_cdf(p) for p in _marginals(qp, time_grid)]
    grid = isinstance(qp.space, GridSpace)
    transitions = []
    if method == 'monotone' and not grid:
        for k, (t0, t1) in enumerate(zip(time_grid[:-1], time_grid[1:])):
            pi = transport_coupling(qp, t0, t1, threshold)
            rows = pi.sum(axis=1, keepdims=True)
            trans = np.divide(pi, rows, out=np.zeros_like(pi), where=rows > 0)
            cum = np.cumsum(trans, axis=1)
            transitions.append(cum / np.where(cum[:, -1:] > 0, cum[:, -1:], 1.0))

    chunks = list(chunk_slices(count, chunk_size))

    def job(item):
        c, sl = item
        return _sample_chunk(seed, c, sl.stop - sl.start, method, cdfs, transitions, grid)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(job, chunks))
    else:
        parts = [job(chunks[i]) for i in trange(len(chunks), disable=not progress,
                                                 bar_format=bar_format, desc='ensemble')]
    logger.debug(f'sampled {count} trajectories over {len(time_grid)} times with method {method}')
    return TrajectoryEnsemble(time_grid, np.concatenate(parts, axis=0), seed, method)


def static_region_frequency(ensemble: TrajectoryEnsemble, region: Region) -> np.ndarray:
    '''
    frequency of `region` at every grid time
    '''
    return region.mask[ensemble.positions].mean(axis=0)
