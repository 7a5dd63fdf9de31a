#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Dict,
                    Hashable,
                    Iterable,
                    NoReturn,
                    Optional,
                    Union)

from qcp.born.measurement import MeasurementModel
from qcp.common.exceptions import (PovmInvariantError,
                                   UnnormalizedState)
from qcp.common.yaml_ops import save_yaml
from qcp.hilbert import WaveFunction
from qcp.utils.np_utils import norm_squared
from qcp.utils.sundry_utils import make_rng
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

SELF_ADJOINT_TOLERANCE = 1e-12
POSITIVITY_TOLERANCE = 1e-10
COMPLETENESS_TOLERANCE = 1e-10
BOUNDEDNESS_PROBES = 16
BOUNDEDNESS_STREAM = 5


class Povm(object):
    '''
    Positive operators O(a) on the micro space, one per atom of the
    outcome set (neutral element included); events sum their atoms.
    '''

    def __init__(self, model: MeasurementModel, operators: Dict[Hashable, np.ndarray]):
        self.model = model
        self.dimension = model.micro.size
        self.operators = {a: np.asarray(operators[a], dtype=np.complex128) for a in model.atoms}

    def operator(self, outcomes: Iterable[Hashable]) -> np.ndarray:
        chosen = set(outcomes)
        unknown = chosen - set(self.operators)
        assert not unknown, f'unknown outcomes {sorted(map(str, unknown))}.'
        out = np.zeros((self.dimension, self.dimension), dtype=np.complex128)
        for a in self.model.atoms:
            if a in chosen:
                out += self.operators[a]
        return out

    @property
    def self_adjoint_residual(self) -> float:
        return max(float(np.max(np.abs(o - o.conj().T))) for o in self.operators.values())

    @property
    def min_eigenvalue(self) -> float:
        return min(float(np.linalg.eigvalsh((o + o.conj().T) / 2).min()) for o in self.operators.values())

    @property
    def completeness_residual(self) -> float:
        return float(np.max(np.abs(self.operator(self.model.atoms) - np.eye(self.dimension))))

    def check(self) -> 'Povm':
        if self.self_adjoint_residual > SELF_ADJOINT_TOLERANCE:
            raise PovmInvariantError(f'{self.model.name}: operator not self-adjoint (residual {self.self_adjoint_residual:.3e})')
        if self.min_eigenvalue < -POSITIVITY_TOLERANCE:
            raise PovmInvariantError(f'{self.model.name}: negative eigenvalue {self.min_eigenvalue:.3e}')
        if self.completeness_residual > COMPLETENESS_TOLERANCE:
            raise PovmInvariantError(f'{self.model.name}: atoms sum to identity only within {self.completeness_residual:.3e}')
        return self

    def to_dict(self) -> Dict:
        return {'dimension': self.dimension,
                'model': self.model.name,
                'operators': {str(a): [[float(z.real), float(z.imag)] for z in o.ravel()]
                              for a, o in self.operators.items()}}


def _isometry(model: MeasurementModel) -> np.ndarray:
    '''
    columns U (e_j ⊗ Phi) for the micro basis vectors e_j
    '''
    embed = np.kron(np.eye(model.micro.size), model.ready.amplitudes.reshape(-1, 1))
    return model.coupling @ embed


def bilinear_form(model: MeasurementModel, outcomes: Iterable[Hashable], phi: np.ndarray, varphi: np.ndarray) -> complex:
    '''
    h_A(phi, varphi) = <phi ⊗ Phi | U^† E[f^-1(A)] U | varphi ⊗ Phi>
    '''
    v = _isometry(model)
    mask = model.preimage(outcomes).mask
    return complex(np.vdot(v[mask] @ phi, v[mask] @ varphi))


def build_povm(model: MeasurementModel, ready: Optional[WaveFunction] = None, seed: int = 0) -> Povm:
    '''
    Matrix elements <e_i|O(A)|e_j> = h_A(e_i, e_j) for every atom A,
    followed by the invariant checks and a boundedness spot check of the
    form on random vectors.
    '''
    if ready is not None:
        model = MeasurementModel(model.micro, model.apparatus, model.coupling, model.outcomes,
                                 dict(zip(model.lab.labels, model.outcome_of)), ready, model.neutral, model.name)
    v = _isometry(model)
    operators = {}
    for atom in model.atoms:
        rows = v[model.preimage([atom]).mask]
        operators[atom] = rows.conj().T @ rows
    povm = Povm(model, operators).check()

    rng = make_rng(seed, BOUNDEDNESS_STREAM)
    d = model.micro.size
    for _ in range(BOUNDEDNESS_PROBES):
        phi = rng.normal(size=d) + 1j * rng.normal(size=d)
        varphi = rng.normal(size=d) + 1j * rng.normal(size=d)
        atom = model.atoms[rng.integers(len(model.atoms))]
        h = bilinear_form(model, [atom], phi, varphi)
        bound = np.linalg.norm(phi) * np.linalg.norm(varphi)
        if abs(h) > bound * (1 + 1e-12):
            raise PovmInvariantError(f'{model.name}: |h| = {abs(h):.6g} exceeds {bound:.6g}')
    logger.debug(f'POVM of {model.name}: completeness residual {povm.completeness_residual:.2e}')
    return povm


def _amplitudes(phi: Union[WaveFunction, np.ndarray]) -> np.ndarray:
    a = phi.amplitudes if isinstance(phi, WaveFunction) else np.asarray(phi, dtype=np.complex128)
    n = norm_squared(a)
    if abs(n - 1) > 1e-10:
        raise UnnormalizedState(f'micro state has norm^2 {n:.12g}')
    return a


def outcome_probability(povm: Povm, outcomes: Iterable[Hashable], phi: Union[WaveFunction, np.ndarray]) -> float:
    '''
    P_phi(A) = <phi|O(A)|phi>
    '''
    a = _amplitudes(phi)
    return float(np.real(np.vdot(a, povm.operator(outcomes) @ a)))


def direct_probability(model: MeasurementModel, outcomes: Iterable[Hashable], phi: Union[WaveFunction, np.ndarray]) -> float:
    '''
    ||E[f^-1(A)] U (phi ⊗ Phi)||^2, the position-based reading of the pointer
    '''
    a = _amplitudes(phi)
    final = model.coupling @ np.kron(a, model.ready.amplitudes)
    return norm_squared(final[model.preimage(outcomes).mask])


def neutral_weight(model: MeasurementModel, phi: Union[WaveFunction, np.ndarray]) -> float:
    return direct_probability(model, [model.neutral], phi)


def save_povm(filepath: str, povm: Povm) -> NoReturn:
    save_yaml(filepath, povm.to_dict())
    logger.info(f'POVM of {povm.model.name} written to {filepath}')
