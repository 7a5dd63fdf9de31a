import pytest

from qcp.classical import (FiniteProbabilitySpace,
                           conditional_ratios,
                           m_p,
                           product_space)
from qcp.common.exceptions import ZeroProbabilityEvent


def test_masses_must_sum_to_one():
    with pytest.raises(AssertionError):
        FiniteProbabilitySpace(['a', 'b'], [0.5, 0.6])
    with pytest.raises(AssertionError):
        FiniteProbabilitySpace(['a', 'b'], [1.5, -0.5])


def test_fair_coins():
    coin = FiniteProbabilitySpace(['H', 'T'], [0.5, 0.5])
    both = product_space(coin, coin)
    assert len(both) == 4
    assert all(both.masses[o] == 0.25 for o in both.outcomes)
    assert both.outcomes[0] == ('H', 'H')


def test_point_mass_factor_is_trivial():
    die = FiniteProbabilitySpace([1, 2, 3], [0.2, 0.3, 0.5])
    point = FiniteProbabilitySpace(['*'], [1.0])
    prod = product_space(die, point)
    assert [prod.masses[(k, '*')] for k in (1, 2, 3)] == [0.2, 0.3, 0.5]
    assert prod.marginal(0).masses == die.masses


def test_bernoulli_power_marginal():
    coin = FiniteProbabilitySpace.bernoulli(0.3, 'H', 'T')
    ten = coin.power(10)
    assert len(ten) == 2 ** 10 and ten.factors == 10
    first = ten.event_where(lambda o: o[0] == 'H')
    assert abs(first.probability - 0.3) <= 1e-12
    assert abs(ten.marginal(7).masses['H'] - 0.3) <= 1e-12


def test_event_algebra():
    die = FiniteProbabilitySpace(range(1, 7), [1 / 6] * 6)
    even = die.event([2, 4, 6])
    low = die.event([1, 2, 3])
    assert (even & low).members == {2}
    assert (~even).members == {1, 3, 5}
    assert (even - low).issubset(even)
    assert abs((even | low).probability - 5 / 6) <= 1e-12


def test_m_p_and_conditionals():
    die = FiniteProbabilitySpace(range(1, 7), [1 / 6] * 6)
    a = die.event([1, 2, 3])
    assert m_p(die, a, a) == 1.0
    assert conditional_ratios(die, a, a) == (1.0, 1.0)
    b = die.event([4, 5])
    assert m_p(die, a, b) == 0.0
    c = die.event([3, 4])
    assert abs(m_p(die, a, c) - 2 * (1 / 6) / (5 / 6)) <= 1e-12
    with pytest.raises(ZeroProbabilityEvent):
        m_p(die, die.event([]), die.event([]))
    with pytest.raises(ZeroProbabilityEvent):
        conditional_ratios(die, a, die.event([]))
