#!/usr/bin/env python3
# encoding: utf-8

import itertools
import numpy as np

from dataclasses import dataclass
from typing import (List,
                    Tuple)

from qcp.classical.space import (Event,
                                 FiniteProbabilitySpace)
from qcp.common.exceptions import ZeroProbabilityEvent


def m_p(space: FiniteProbabilitySpace, a: Event, b: Event) -> float:
    '''
    2 P(A & B) / (P(A) + P(B))
    '''
    total = space.probability(a) + space.probability(b)
    if total <= 0:
        raise ZeroProbabilityEvent('P(A) + P(B) = 0')
    return 2 * space.probability(a & b) / total


def conditional_ratios(space: FiniteProbabilitySpace, a: Event, b: Event) -> Tuple[float, float]:
    '''
    (P(A & B) / P(A), P(A & B) / P(B))
    '''
    pa, pb = space.probability(a), space.probability(b)
    if pa <= 0 or pb <= 0:
        raise ZeroProbabilityEvent(f'P(A) = {pa}, P(B) = {pb}')
    both = space.probability(a & b)
    return both / pa, both / pb


@dataclass(frozen=True)
class EquivalenceViolation:
    masses: Tuple[float, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    m: float
    conditionals: Tuple[float, float]


def _compositions(units: int, parts: int) -> np.ndarray:
    rows = []
    for cuts in itertools.combinations(range(units + parts - 1), parts - 1):
        edges = (-1,) + cuts + (units + parts - 1,)
        rows.append([edges[i + 1] - edges[i] - 1 for i in range(parts)])
    return np.array(rows, dtype=float)


def equivalence_sweep(max_outcomes: int = 5, step: float = 0.05, tolerance: float = 1e-12) -> Tuple[int, List[EquivalenceViolation]]:
    '''
    Exhaustive check over every space with at most `max_outcomes` outcomes and
    masses on a `step` grid, and every pair of events with positive mass:
        1 - M_P <= delta           =>  both conditionals >= 1 - 2 delta
        both conditionals >= 1 - d =>  M_P >= 1 - d
    return:
        (number of checked (space, A, B) triples, violations)
    '''
    units = int(round(1 / step))
    assert abs(units * step - 1) <= 1e-12, 'step must divide 1.'
    checked, violations = 0, []
    for n in range(1, max_outcomes + 1):
        masses = _compositions(units, n) / units
        members = np.array(list(itertools.product([False, True], repeat=n)))
        pe = masses @ members.T                     # (spaces, events)
        for i, a in enumerate(members):
            pab = masses @ (a & members).T          # P(A & B) for every B
            pa = pe[:, i:i + 1]
            ok = (pa > 0) & (pe > 0)
            with np.errstate(divide='ignore', invalid='ignore'):
                m = 2 * pab / (pa + pe)
                ca, cb = pab / pa, pab / pe
            delta = 1 - m
            worst = np.maximum(1 - ca, 1 - cb)
            bad = ok & ((np.minimum(ca, cb) < 1 - 2 * delta - tolerance) | (m < 1 - worst - tolerance))
            checked += int(ok.sum())
            for s, j in zip(*np.nonzero(bad)):
                violations.append(EquivalenceViolation(tuple(masses[s]), tuple(np.flatnonzero(a)),
                                                       tuple(np.flatnonzero(members[j])), float(m[s, j]),
                                                       (float(ca[s, j]), float(cb[s, j]))))
    return checked, violations
