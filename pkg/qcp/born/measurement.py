#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Callable,
                    Dict,
                    Hashable,
                    Iterable,
                    Sequence,
                    Union)

from qcp.common.exceptions import NonUnitary
from qcp.hilbert import (ModeSpace,
                         Region,
                         WaveFunction,
                         complete_isometry,
                         tensor)
from qcp.utils.np_utils import unitarity_defect
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

NEUTRAL = 'omega0'
READY = 'ready'


class MeasurementModel(object):
    '''
    A laboratory made of a micro system and a pointer apparatus.

    The coupling is the whole-measurement evolution U(t_F - t_I) on the
    product space; `outcome_map` reads an outcome off every product label,
    returning `neutral` for configurations that recorded nothing.
    '''

    def __init__(self,
                 micro: ModeSpace,
                 apparatus: ModeSpace,
                 coupling: np.ndarray,
                 outcomes: Sequence[Hashable],
                 outcome_map: Union[Callable, Dict],
                 ready: Union[Hashable, WaveFunction] = READY,
                 neutral: Hashable = NEUTRAL,
                 name: str = ''):
        self.micro = micro
        self.apparatus = apparatus
        self.lab = ModeSpace.product(micro, apparatus)
        self.coupling = np.asarray(coupling, dtype=np.complex128)
        assert self.coupling.shape == (self.lab.size, self.lab.size), \
            f'coupling must be {self.lab.size}x{self.lab.size}, got {self.coupling.shape}.'
        defect = unitarity_defect(self.coupling)
        if defect > 1e-12:
            raise NonUnitary(f'coupling of {name or "model"} has unitarity defect {defect:.3e}')
        self.outcomes = tuple(outcomes)
        self.neutral = neutral
        assert neutral not in self.outcomes, 'the neutral element must not be an outcome.'
        f = outcome_map.__getitem__ if isinstance(outcome_map, dict) else outcome_map
        self.outcome_of = tuple(f(label) for label in self.lab.labels)
        stray = set(self.outcome_of) - set(self.outcomes) - {neutral}
        assert not stray, f'outcome map yields unknown values {sorted(map(str, stray))}.'
        if not isinstance(ready, WaveFunction):
            ready = WaveFunction.from_labels(apparatus, {ready: 1.0})
        assert ready.is_normalized, 'the ready state must be normalized.'
        self.ready = ready
        self.name = name

    @property
    def atoms(self):
        return self.outcomes + (self.neutral,)

    def preimage(self, outcomes: Iterable[Hashable]) -> Region:
        '''
        f^-1(A) as a region of the lab space
        '''
        chosen = set(outcomes)
        return Region(self.lab, np.array([o in chosen for o in self.outcome_of], dtype=bool))

    def lab_state(self, phi: WaveFunction) -> WaveFunction:
        return tensor(phi, self.ready)

    def recorded(self, phi: WaveFunction) -> np.ndarray:
        '''
        U (phi ⊗ Phi) as a flat amplitude array
        '''
        return self.coupling @ self.lab_state(phi).amplitudes

    def describe(self):
        return dict(name=self.name, micro=self.micro.describe(), apparatus=self.apparatus.describe(),
                    outcomes=[str(o) for o in self.outcomes], neutral=str(self.neutral))

    def __repr__(self):
        return f'MeasurementModel({self.name or "unnamed"}, d={self.micro.size}, outcomes={list(self.outcomes)})'


def _pointer_spaces(d: int):
    micro = ModeSpace([f'e{i}' for i in range(d)])
    apparatus = ModeSpace([READY] + [f'p{i}' for i in range(d)])
    return micro, apparatus


def _pointer_outcome(label):
    _, pointer = label
    return NEUTRAL if pointer == READY else pointer[1:]


def _blockwise(micro: ModeSpace, apparatus: ModeSpace, blocks) -> np.ndarray:
    '''
    block-diagonal coupling: micro basis state i rotates the apparatus by blocks[i]
    '''
    a = apparatus.size
    u = np.zeros((micro.size * a, micro.size * a), dtype=np.complex128)
    for i, block in enumerate(blocks):
        u[i * a:(i + 1) * a, i * a:(i + 1) * a] = block
    return u


def _pointer_block(a: int, column: np.ndarray) -> np.ndarray:
    return complete_isometry({0: column}, a)


def ideal_pointer_model(d: int = 2) -> MeasurementModel:
    '''
    Micro basis state i moves the pointer from `ready` to `p{i}`.
    '''
    assert d >= 2, 'an ideal pointer needs at least two outcomes.'
    micro, apparatus = _pointer_spaces(d)
    blocks = []
    for i in range(d):
        column = np.zeros(apparatus.size)
        column[1 + i] = 1.0
        blocks.append(_pointer_block(apparatus.size, column))
    return MeasurementModel(micro, apparatus, _blockwise(micro, apparatus, blocks),
                            [str(i) for i in range(d)], _pointer_outcome, name=f'ideal_pointer_{d}')


def noisy_pointer_model(eta: float = 0.1) -> MeasurementModel:
    '''
    Two-outcome pointer reading the right value with amplitude sqrt(1 - eta)
    and the wrong one with amplitude sqrt(eta).
    '''
    assert 0 <= eta <= 1, f'eta must lie in [0, 1], got {eta}.'
    micro, apparatus = _pointer_spaces(2)
    blocks = []
    for i in range(2):
        column = np.zeros(apparatus.size)
        column[1 + i] = np.sqrt(1 - eta)
        column[2 - i] = np.sqrt(eta)
        blocks.append(_pointer_block(apparatus.size, column))
    return MeasurementModel(micro, apparatus, _blockwise(micro, apparatus, blocks),
                            ['0', '1'], _pointer_outcome, name=f'noisy_pointer_{eta:g}')


def unrecorded_model(leak: float = 0.01) -> MeasurementModel:
    '''
    Ideal two-outcome pointer that stays at `ready` with probability `leak`.
    '''
    assert 0 <= leak <= 1, f'leak must lie in [0, 1], got {leak}.'
    micro, apparatus = _pointer_spaces(2)
    blocks = []
    for i in range(2):
        column = np.zeros(apparatus.size)
        column[0] = np.sqrt(leak)
        column[1 + i] = np.sqrt(1 - leak)
        blocks.append(_pointer_block(apparatus.size, column))
    return MeasurementModel(micro, apparatus, _blockwise(micro, apparatus, blocks),
                            ['0', '1'], _pointer_outcome, name=f'unrecorded_{leak:g}')


def spin_model(axis_angle: float = 0.0) -> MeasurementModel:
    '''
    Stern-Gerlach reading of a spin-1/2 along the axis tilted by
    `axis_angle` from z in the x-z plane; outcomes '+' and '-'.
    '''
    micro = ModeSpace(['up', 'down'])
    apparatus = ModeSpace([READY, '+', '-'])
    c, s = np.cos(axis_angle / 2), np.sin(axis_angle / 2)
    eigen = np.array([[c, -s], [s, c]], dtype=np.complex128)       # columns |+n>, |-n>
    ideal = ideal_pointer_model(2).coupling
    rotate = np.kron(eigen, np.eye(apparatus.size))
    coupling = rotate @ ideal @ rotate.conj().T

    def outcome(label):
        return NEUTRAL if label[1] == READY else label[1]
    return MeasurementModel(micro, apparatus, coupling, ['+', '-'], outcome, name=f'spin_{axis_angle:g}')
