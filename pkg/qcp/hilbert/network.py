#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Dict,
                    Hashable,
                    List,
                    Sequence,
                    Tuple)

from qcp.common.exceptions import NonUnitary
from qcp.hilbert.propagators import (ScheduledPropagator,
                                     _check_unitary)
from qcp.hilbert.spaces import ModeSpace


def beam_splitter_matrix(transmissivity: float = 0.5) -> np.ndarray:
    '''
    [[t, i r], [i r, t]] with t = sqrt(T), r = sqrt(1 - T); T = 1/2 gives (1/sqrt2)[[1, i], [i, 1]].
    '''
    assert 0 <= transmissivity <= 1, 'transmissivity must lie in [0, 1].'
    t, r = np.sqrt(transmissivity), np.sqrt(1 - transmissivity)
    return np.array([[t, 1j * r], [1j * r, t]], dtype=np.complex128)


def local_operator(dims: Sequence[int], axes: Sequence[int], op: np.ndarray) -> np.ndarray:
    '''
    Embed `op`, acting on the tensor factors `axes` (in that order), into the
    full product space with factor dimensions `dims`.
    '''
    dims, axes = tuple(dims), tuple(axes)
    n, k, m = int(np.prod(dims)), len(axes), len(dims)
    local = [dims[a] for a in axes]
    op = np.asarray(op, dtype=np.complex128).reshape(local + local)
    if k == m and axes == tuple(range(m)):
        return op.reshape(n, n)
    eye = np.eye(n, dtype=np.complex128).reshape(dims + dims)
    res = np.tensordot(op, eye, axes=(list(range(k, 2 * k)), list(axes)))
    order = list(axes) + [a for a in range(m) if a not in axes]
    res = np.transpose(res, [order.index(j) for j in range(m)] + list(range(m, 2 * m)))
    return res.reshape(n, n)


def complete_isometry(columns: Dict[int, np.ndarray], size: int) -> np.ndarray:
    '''
    A unitary whose column j equals columns[j]; the remaining columns span the
    orthogonal complement (deterministically, via QR).
    '''
    idx = sorted(columns)
    v = np.column_stack([np.asarray(columns[j], dtype=np.complex128) for j in idx])
    gram_defect = np.max(np.abs(v.conj().T @ v - np.eye(len(idx))))
    if gram_defect > 1e-12:
        raise NonUnitary(f'prescribed columns are not orthonormal (defect {gram_defect:.3e})')
    q, _ = np.linalg.qr(np.hstack([v, np.eye(size, dtype=np.complex128)]))
    u = np.zeros((size, size), dtype=np.complex128)
    u[:, idx] = v
    rest = [j for j in range(size) if j not in columns]
    u[:, rest] = q[:, len(idx):size]
    return u


def row_completion(row: np.ndarray) -> np.ndarray:
    '''
    A unitary whose first row is the unit vector `row`.
    '''
    w = complete_isometry({0: np.conj(row)}, len(row))
    return w.conj().T


class ModeNetwork(object):
    '''
    Builder for timed optical elements on a (possibly product) mode space.
    Elements fire at integer ticks; elements sharing a tick apply in the order added.
    Methods taking `axis` act on that tensor factor and use its labels.
    '''

    def __init__(self, space: ModeSpace, time_step: float = 1.0):
        self.space = space
        self.time_step = time_step
        self.elements: List[Tuple[int, str, np.ndarray]] = []

    def _index(self, axis: int, label: Hashable) -> int:
        return self.space.factor_index(axis, label)

    def _lift(self, axes: Sequence[int], op: np.ndarray) -> np.ndarray:
        if len(self.space.factors) == 1:
            return np.asarray(op, dtype=np.complex128)
        return local_operator(self.space.dims, axes, op)

    def unitary(self, at: int, matrix: np.ndarray, name: str = 'U') -> 'ModeNetwork':
        matrix = np.asarray(matrix, dtype=np.complex128)
        _check_unitary(matrix, name)
        self.elements.append((int(at), name, matrix))
        return self

    def local(self, at: int, axes: Sequence[int], op: np.ndarray, name: str = 'local') -> 'ModeNetwork':
        return self.unitary(at, self._lift(axes, op), name)

    def beam_splitter(self, at: int, a: Hashable, b: Hashable, transmissivity: float = 0.5,
                      axis: int = 0, name: str = 'BS') -> 'ModeNetwork':
        d = self.space.dims[axis]
        i, j = self._index(axis, a), self._index(axis, b)
        op = np.eye(d, dtype=np.complex128)
        op[np.ix_([i, j], [i, j])] = beam_splitter_matrix(transmissivity)
        return self.local(at, [axis], op, name)

    def phase(self, at: int, mode: Hashable, phi: float, axis: int = 0, name: str = 'phase') -> 'ModeNetwork':
        op = np.eye(self.space.dims[axis], dtype=np.complex128)
        i = self._index(axis, mode)
        op[i, i] = np.exp(1j * phi)
        return self.local(at, [axis], op, name)

    def route(self, at: int, inputs: Sequence[Hashable], outputs: Sequence[Hashable],
              matrix: np.ndarray = None, axis: int = 0, name: str = 'route') -> 'ModeNetwork':
        '''
        Move amplitude from `inputs` to `outputs` through the unitary `matrix`
        (identity by default); outputs flow back into inputs through its adjoint.
        '''
        return self.local(at, [axis], route_matrix(self.space.factors[axis], inputs, outputs, matrix), name)

    def controlled(self, at: int, control_axis: int, control_label: Hashable,
                   target_axis: int, op: np.ndarray, name: str = 'controlled') -> 'ModeNetwork':
        '''
        Apply `op` on factor target_axis when factor control_axis holds control_label.
        '''
        dc, dt = self.space.dims[control_axis], self.space.dims[target_axis]
        p = np.zeros((dc, dc), dtype=np.complex128)
        c = self._index(control_axis, control_label)
        p[c, c] = 1
        local = np.kron(p, np.asarray(op, dtype=np.complex128)) + np.kron(np.eye(dc) - p, np.eye(dt))
        return self.local(at, [control_axis, target_axis], local, name)

    def propagator(self) -> ScheduledPropagator:
        return ScheduledPropagator(self.space, self.elements, self.time_step)


def route_matrix(labels: Sequence[Hashable], inputs: Sequence[Hashable], outputs: Sequence[Hashable],
                 matrix: np.ndarray = None) -> np.ndarray:
    labels = list(labels)
    k = len(inputs)
    assert k == len(outputs), 'route needs as many outputs as inputs.'
    assert not set(inputs) & set(outputs), 'route inputs and outputs must be distinct modes.'
    w = np.eye(k, dtype=np.complex128) if matrix is None else np.asarray(matrix, dtype=np.complex128)
    _check_unitary(w, 'route matrix')
    i = [labels.index(l) for l in inputs]
    o = [labels.index(l) for l in outputs]
    op = np.eye(len(labels), dtype=np.complex128)
    op[np.ix_(i, i)] = 0
    op[np.ix_(o, o)] = 0
    op[np.ix_(o, i)] = w
    op[np.ix_(i, o)] = w.conj().T
    return op
