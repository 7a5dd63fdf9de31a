#!/usr/bin/env python3
# encoding: utf-8

import numpy as np

from typing import (Tuple,
                    Union)

from qcp.common.exceptions import (IntervalMismatch,
                                   ProductDimensionTooLarge)
from qcp.hilbert import (ModeSpace,
                         ProductPropagator,
                         WaveFunction,
                         tensor)
from qcp.squant.process import QuantumProcess
from qcp.squant.sset import ProductSSet
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

MAX_DIMENSION = 2 ** 20


class SymbolicProduct(object):
    '''
    Product of processes that is never materialized (grid factors).
    Only product s-sets are supported, through factorized weights.
    '''

    def __init__(self, factors: Tuple[QuantumProcess, ...]):
        self.factors = tuple(factors)
        self.interval = self.factors[0].interval

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(f.space.size for f in self.factors)

    def psi_hat_factors(self, s: ProductSSet) -> Tuple[WaveFunction, ...]:
        assert len(s.regions) == len(self.factors), 'one region per factor.'
        return tuple(f.psi_hat(s.factor(i)) for i, f in enumerate(self.factors))

    def weight(self, s: ProductSSet) -> float:
        assert len(s.regions) == len(self.factors), 'one region per factor.'
        return float(np.prod([f.weight(s.factor(i)) for i, f in enumerate(self.factors)]))

    def __repr__(self):
        return f'SymbolicProduct(dims={self.dims})'


Product = Union[QuantumProcess, SymbolicProduct]


def _factors(qp) -> Tuple[QuantumProcess, ...]:
    return qp.factors if isinstance(qp, SymbolicProduct) else (qp,)


def product(qp1: Product, qp2: Product, max_dimension: int = MAX_DIMENSION) -> Product:
    '''
    Q1 x Q2: tensor state, factor-wise propagator, common interval.
    Mode processes give a concrete QuantumProcess; anything with a grid
    factor gives a SymbolicProduct.
    '''
    if any(abs(a - b) > 1e-12 for a, b in zip(qp1.interval, qp2.interval)):
        raise IntervalMismatch(f'{qp1.interval} vs {qp2.interval}')
    concrete = isinstance(qp1, QuantumProcess) and isinstance(qp2, QuantumProcess) \
        and isinstance(qp1.space, ModeSpace) and isinstance(qp2.space, ModeSpace)
    if not concrete:
        return SymbolicProduct(_factors(qp1) + _factors(qp2))
    dimension = qp1.space.size * qp2.space.size
    if dimension > max_dimension:
        raise ProductDimensionTooLarge(f'product dimension {dimension} exceeds the cap {max_dimension}')
    return QuantumProcess(ModeSpace.product(qp1.space, qp2.space),
                          ProductPropagator(qp1.propagator, qp2.propagator),
                          tensor(qp1.initial_state, qp2.initial_state),
                          qp1.interval,
                          name=f'{qp1.name or "Q"} x {qp2.name or "Q"}')


def power(qp: QuantumProcess, n: int, max_dimension: int = MAX_DIMENSION) -> Product:
    '''
    N-fold product Q^N; the dimension cap is checked before anything is built.
    '''
    assert n >= 1, 'power needs n >= 1.'
    if not isinstance(qp.space, ModeSpace):
        return SymbolicProduct((qp,) * n)
    if qp.space.size ** n > max_dimension:
        raise ProductDimensionTooLarge(f'dimension {qp.space.size}^{n} exceeds the cap {max_dimension}')
    logger.debug(f'materializing a {n}-fold product of dimension {qp.space.size ** n}')
    out = qp
    for _ in range(n - 1):
        out = product(out, qp, max_dimension)
    return out
