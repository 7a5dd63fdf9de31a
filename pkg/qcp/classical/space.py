#!/usr/bin/env python3
# encoding: utf-8

import math

from dataclasses import dataclass
from typing import (Callable,
                    FrozenSet,
                    Hashable,
                    Iterable,
                    Sequence)


class FiniteProbabilitySpace(object):
    '''
    Finite outcome set with point masses; every subset is an event.
    Outcomes of product spaces are flat tuples, one entry per factor.
    '''

    def __init__(self, outcomes: Sequence[Hashable], masses: Sequence[float], factors: int = 1):
        outcomes, masses = tuple(outcomes), tuple(float(m) for m in masses)
        assert len(outcomes) == len(masses) and outcomes, 'one mass per outcome, at least one outcome.'
        assert len(set(outcomes)) == len(outcomes), 'outcomes must be unique.'
        assert min(masses) >= 0, f'masses must be non-negative: {min(masses)}'
        total = math.fsum(masses)
        assert abs(total - 1) <= 1e-12, f'masses sum to {total!r}, not 1.'
        self.outcomes = outcomes
        self.masses = dict(zip(outcomes, masses))
        self.factors = factors

    @classmethod
    def bernoulli(cls, p: float, success: Hashable = 1, failure: Hashable = 0) -> 'FiniteProbabilitySpace':
        assert 0 <= p <= 1, 'p must lie in [0, 1].'
        return cls((success, failure), (p, 1 - p))

    def event(self, outcomes: Iterable[Hashable]) -> 'Event':
        members = frozenset(outcomes)
        unknown = members - set(self.outcomes)
        assert not unknown, f'unknown outcomes: {sorted(map(str, unknown))}'
        return Event(self, members)

    def event_where(self, predicate: Callable[[Hashable], bool]) -> 'Event':
        return Event(self, frozenset(o for o in self.outcomes if predicate(o)))

    def full(self) -> 'Event':
        return Event(self, frozenset(self.outcomes))

    def probability(self, event: 'Event') -> float:
        assert event.space is self, 'event belongs to another probability space.'
        return math.fsum(self.masses[o] for o in event.members)

    def _flat(self, o) -> tuple:
        return tuple(o) if self.factors > 1 else (o,)

    def power(self, n: int) -> 'FiniteProbabilitySpace':
        assert n >= 1, 'power needs n >= 1.'
        out = self
        for _ in range(n - 1):
            out = product_space(out, self)
        return out

    def marginal(self, i: int) -> 'FiniteProbabilitySpace':
        assert 0 <= i < self.factors, f'factor {i} out of range.'
        if self.factors == 1:
            return self
        acc = {}
        for o, m in self.masses.items():
            acc.setdefault(o[i], []).append(m)
        labels = list(acc)
        return FiniteProbabilitySpace(labels, [math.fsum(acc[l]) for l in labels])

    def __len__(self):
        return len(self.outcomes)

    def __repr__(self):
        return f'FiniteProbabilitySpace({len(self.outcomes)} outcomes, factors={self.factors})'


@dataclass(frozen=True)
class Event:
    space: FiniteProbabilitySpace
    members: FrozenSet[Hashable]

    def _check(self, other: 'Event'):
        assert self.space is other.space, 'events belong to different probability spaces.'

    def __and__(self, other):
        self._check(other)
        return Event(self.space, self.members & other.members)

    def __or__(self, other):
        self._check(other)
        return Event(self.space, self.members | other.members)

    def __sub__(self, other):
        self._check(other)
        return Event(self.space, self.members - other.members)

    def __invert__(self):
        return Event(self.space, frozenset(self.space.outcomes) - self.members)

    def issubset(self, other: 'Event') -> bool:
        self._check(other)
        return self.members <= other.members

    @property
    def probability(self) -> float:
        return self.space.probability(self)


def product_space(p1: FiniteProbabilitySpace, p2: FiniteProbabilitySpace) -> FiniteProbabilitySpace:
    '''
    P1 x P2: masses multiply on outcome pairs
    '''
    outcomes, masses = [], []
    for a in p1.outcomes:
        for b in p2.outcomes:
            outcomes.append(p1._flat(a) + p2._flat(b))
            masses.append(p1.masses[a] * p2.masses[b])
    return FiniteProbabilitySpace(outcomes, masses, factors=p1.factors + p2.factors)
