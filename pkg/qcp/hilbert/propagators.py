#!/usr/bin/env python3
# encoding: utf-8

import numpy as np
import scipy.fft as sfft

from scipy.linalg import (expm,
                          ishermitian)
from typing import (Callable,
                    List,
                    Sequence,
                    Tuple,
                    Union)

from qcp.common.exceptions import (NonCommensurateDuration,
                                   NonUnitary,
                                   SpaceMismatch)
from qcp.hilbert.spaces import (GridSpace,
                                ModeSpace,
                                Space)
from qcp.hilbert.wavefunction import WaveFunction
from qcp.utils.np_utils import (readonly,
                                unitarity_defect)

UNITARY_TOLERANCE = 1e-12


def _steps(duration: float, step: float) -> int:
    n = int(round(duration / step))
    if abs(n * step - duration) > 1e-9 * max(1.0, abs(duration)):
        raise NonCommensurateDuration(f'duration {duration} is not a multiple of the time step {step}')
    return n


def _check_unitary(u: np.ndarray, name: str = ''):
    defect = unitarity_defect(u)
    if defect > UNITARY_TOLERANCE:
        raise NonUnitary(f'{name or "matrix"} is not unitary: ||U^+U - 1||_max = {defect:.3e}')


class Propagator(object):
    '''
    U(t) acting on amplitude arrays of shape (space.size, ...).
    Trailing axes are a batch: every column evolves independently.
    '''
    kind = ''

    def __init__(self, space: Space, time_step: float):
        assert time_step > 0, 'time_step must be positive.'
        self.space = space
        self.time_step = float(time_step)

    def evolve_array(self, amplitudes: np.ndarray, t0: float, duration: float) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self):
        return f'{self.__class__.__name__}({self.space!r}, time_step={self.time_step})'


class SplitOperatorPropagator(Propagator):
    '''
    Strang splitting exp(-iV dt/2) F^-1 exp(-iT dt) F exp(-iV dt/2) on a
    periodic grid. A step covering [t, t + dt] uses the potential active at
    its midpoint, so a backward step over the same interval is the exact inverse.
    '''
    kind = 'split-operator'

    def __init__(self,
                 space: GridSpace,
                 time_step: float,
                 mass: float = 1.0,
                 potential: Union[np.ndarray, Callable, None] = None,
                 schedule: Sequence[Tuple[float, Union[np.ndarray, Callable]]] = None):
        '''
        params:
            potential: static potential, flat array or callable of the coordinate arrays
            schedule: [(start_time, potential), ...] for potentials switched on at given times;
                      the earliest entry also applies before its start time
        '''
        assert isinstance(space, GridSpace), 'split-operator evolution needs a grid.'
        assert mass > 0, 'mass must be positive.'
        super().__init__(space, time_step)
        self.mass = float(mass)
        if schedule is None:
            schedule = [(-np.inf, 0.0 if potential is None else potential)]
        else:
            assert potential is None, 'give either potential or schedule.'
        schedule = sorted(schedule, key=lambda e: e[0])
        self.starts = np.array([s for s, _ in schedule], dtype=float)
        self.potentials = [readonly(self._compile(v)) for _, v in schedule]
        self._kinetic = sum(k ** 2 for k in space.wavenumbers).reshape(space.shape) / (2 * self.mass)
        self._phases = {}

    def _compile(self, v) -> np.ndarray:
        if callable(v):
            v = v(*self.space.coordinates)
        return np.broadcast_to(np.asarray(v, dtype=float), (self.space.size,)).copy()

    def potential_index(self, t: float) -> int:
        return max(int(np.searchsorted(self.starts, t, side='right')) - 1, 0)

    def potential_at(self, t: float) -> np.ndarray:
        return self.potentials[self.potential_index(t)]

    def potential_gradient(self, t: float) -> List[np.ndarray]:
        v = self.potential_at(t).reshape(self.space.shape)
        if self.space.dimension == 1:
            return [np.gradient(v, self.space.spacing[0], edge_order=2).ravel()]
        return [g.ravel() for g in np.gradient(v, *self.space.spacing, edge_order=2)]

    def _factors(self, index: int, sign: int):
        key = (index, sign)
        if key not in self._phases:
            dt = sign * self.time_step
            half = np.exp(-0.5j * dt * self.potentials[index]).reshape(self.space.shape)
            kinetic = np.exp(-1j * dt * self._kinetic)
            self._phases[key] = (half, kinetic)
        return self._phases[key]

    def evolve_array(self, amplitudes, t0, duration):
        n = _steps(duration, self.time_step)
        if n == 0:
            return np.array(amplitudes, dtype=np.complex128, copy=True)
        sign = 1 if n > 0 else -1
        shape = self.space.shape
        axes = tuple(range(self.space.dimension))
        psi = np.asarray(amplitudes, dtype=np.complex128).reshape(shape + (-1,))
        for j in range(abs(n)):
            midpoint = t0 + sign * (j + 0.5) * self.time_step
            half, kinetic = self._factors(self.potential_index(midpoint), sign)
            psi = psi * half[..., None]
            psi = sfft.ifftn(sfft.fftn(psi, axes=axes) * kinetic[..., None], axes=axes)
            psi = psi * half[..., None]
        return psi.reshape(np.shape(amplitudes))


class DensePropagator(Propagator):
    '''
    Dense evolution, either from a Hermitian generator H (any duration,
    U(tau) = expm(-i H tau)) or from a fixed unitary per time step.
    '''
    kind = 'dense'

    def __init__(self, space: Space, unitary: np.ndarray = None, hamiltonian: np.ndarray = None, time_step: float = 1.0):
        super().__init__(space, time_step)
        assert (unitary is None) != (hamiltonian is None), 'give exactly one of unitary or hamiltonian.'
        self.unitary = self.hamiltonian = None
        if unitary is not None:
            unitary = np.asarray(unitary, dtype=np.complex128)
            assert unitary.shape == (space.size, space.size)
            _check_unitary(unitary)
            self.unitary = readonly(unitary)
        else:
            hamiltonian = np.asarray(hamiltonian, dtype=np.complex128)
            assert hamiltonian.shape == (space.size, space.size)
            if not ishermitian(hamiltonian, atol=1e-12):
                raise NonUnitary('the generator of a dense propagator must be Hermitian.')
            self.hamiltonian = readonly(hamiltonian)
        self._cache = {}

    def matrix(self, duration: float) -> np.ndarray:
        if self.hamiltonian is not None:
            key = round(duration, 12)
            if key not in self._cache:
                self._cache[key] = expm(-1j * duration * self.hamiltonian)
            return self._cache[key]
        n = _steps(duration, self.time_step)
        if n not in self._cache:
            base = self.unitary if n >= 0 else self.unitary.conj().T
            self._cache[n] = np.linalg.matrix_power(base, abs(n))
        return self._cache[n]

    def evolve_array(self, amplitudes, t0, duration):
        if duration == 0:
            return np.array(amplitudes, dtype=np.complex128, copy=True)
        return self.matrix(duration) @ np.asarray(amplitudes, dtype=np.complex128)


class ScheduledPropagator(Propagator):
    '''
    Mode network: unitary elements fire at integer ticks (time = tick * time_step).
    An element at tick k acts on the step (k - 1, k], so Psi(k * time_step)
    already carries it and the initial state at time 0 already carries every
    element at tick <= 0. Evolving over (t0, t0 + tau] applies the elements
    firing in that window in order; negative durations apply the adjoints in
    reverse order.
    '''
    kind = 'schedule'

    def __init__(self, space: ModeSpace, elements: Sequence[Tuple[int, str, np.ndarray]], time_step: float = 1.0):
        super().__init__(space, time_step)
        checked = []
        for order, (tick, name, u) in enumerate(elements):
            u = np.asarray(u, dtype=np.complex128)
            assert u.shape == (space.size, space.size), f'element {name} has shape {u.shape}.'
            _check_unitary(u, name)
            checked.append((int(tick), order, name, readonly(u)))
        checked.sort(key=lambda e: (e[0], e[1]))
        self.elements = [(tick, name, u) for tick, _, name, u in checked]
        self._adjoints = [readonly(u.conj().T) for _, _, u in self.elements]

    @property
    def last_tick(self) -> int:
        return self.elements[-1][0] if self.elements else 0

    def describe(self) -> List[Tuple[int, str]]:
        return [(tick, name) for tick, name, _ in self.elements]

    def evolve_array(self, amplitudes, t0, duration):
        k0 = _steps(t0, self.time_step)
        n = _steps(duration, self.time_step)
        psi = np.array(amplitudes, dtype=np.complex128, copy=True)
        if n >= 0:
            for tick, _, u in self.elements:
                if k0 < tick <= k0 + n:
                    psi = u @ psi
        else:
            for (tick, _, _), u_dag in zip(reversed(self.elements), reversed(self._adjoints)):
                if k0 + n < tick <= k0:
                    psi = u_dag @ psi
        return psi


class ProductPropagator(Propagator):
    '''
    Factor-wise evolution U1(t) (x) U2(t) on a tensor-product mode space.
    '''
    kind = 'product'

    def __init__(self, first: Propagator, second: Propagator):
        space = ModeSpace.product(first.space, second.space)
        super().__init__(space, min(first.time_step, second.time_step))
        self.first = first
        self.second = second

    def evolve_array(self, amplitudes, t0, duration):
        d1, d2 = self.first.space.size, self.second.space.size
        a = np.asarray(amplitudes, dtype=np.complex128)
        psi = a.reshape(d1, d2, -1)
        batch = psi.shape[2]
        psi = self.first.evolve_array(psi.reshape(d1, d2 * batch), t0, duration).reshape(d1, d2, batch)
        psi = psi.transpose(1, 0, 2).reshape(d2, d1 * batch)
        psi = self.second.evolve_array(psi, t0, duration).reshape(d2, d1, batch).transpose(1, 0, 2)
        return psi.reshape(a.shape)


class PiecewisePropagator(Propagator):
    '''
    Consecutive propagators on one space: pieces [(start_time, propagator), ...].
    A piece governs [start, next start); the earliest one also governs the
    times before its start. Evolution is cut at every piece boundary crossed.
    '''
    kind = 'piecewise'

    def __init__(self, pieces: Sequence[Tuple[float, Propagator]]):
        assert pieces, 'a piecewise propagator needs at least one piece.'
        pieces = sorted(pieces, key=lambda e: e[0])
        space = pieces[0][1].space
        for _, p in pieces:
            if p.space != space:
                raise SpaceMismatch(f'{p!r} lives on another space than {pieces[0][1]!r}')
        super().__init__(space, min(p.time_step for _, p in pieces))
        self.starts = np.array([s for s, _ in pieces], dtype=float)
        self.pieces = [p for _, p in pieces]

    def piece_at(self, t: float) -> Propagator:
        return self.pieces[max(int(np.searchsorted(self.starts, t, side='right')) - 1, 0)]

    def evolve_array(self, amplitudes, t0, duration):
        end = t0 + duration
        lo, hi = min(t0, end), max(t0, end)
        cuts = [s for s in self.starts[1:] if lo + 1e-12 < s < hi - 1e-12]
        if duration < 0:
            cuts.reverse()
        psi = np.array(amplitudes, dtype=np.complex128, copy=True)
        t = t0
        for cut in cuts + [end]:
            psi = self.piece_at((t + cut) / 2).evolve_array(psi, t, cut - t)
            t = cut
        return psi


def dense_grid_hamiltonian(space: GridSpace, mass: float = 1.0, potential: np.ndarray = None) -> np.ndarray:
    '''
    Dense H = F^-1 diag(k^2 / 2m) F + diag(V), the generator the split-operator
    scheme approximates. Meant for small grids only.
    '''
    assert space.size <= 4096, 'dense grid Hamiltonians are an oracle for small grids.'
    axes = tuple(range(space.dimension))
    kinetic = sum(k ** 2 for k in space.wavenumbers).reshape(space.shape) / (2 * mass)
    basis = np.eye(space.size, dtype=np.complex128).reshape(space.shape + (space.size,))
    t = sfft.ifftn(sfft.fftn(basis, axes=axes) * kinetic[..., None], axes=axes).reshape(space.size, space.size)
    h = t + np.diag(np.zeros(space.size) if potential is None else np.asarray(potential, dtype=float).ravel())
    return (h + h.conj().T) / 2


def evolve(psi: WaveFunction, prop: Propagator, duration: float) -> WaveFunction:
    '''
    U(duration) psi, tagged with time psi.time + duration.
    '''
    if psi.space != prop.space:
        raise SpaceMismatch(f'state on {psi.space!r}, propagator on {prop.space!r}')
    return WaveFunction(psi.space, prop.evolve_array(psi.amplitudes, psi.time, duration), psi.time + duration)
