from qcp.common.suite import (SUITE_DEFAULTS,
                              equal_time_reduction)


def test_equal_time_reduction_at_later_times():
    metrics = {}
    assertions = equal_time_reduction(3, dict(SUITE_DEFAULTS, reduction_draws=40), metrics)
    assert [a.name for a in assertions] == ['reduction.equal_time', 'reduction.projection']
    assert all(a.passed for a in assertions), [a.describe() for a in assertions]
    assert metrics['equal_time_reduction']['projection'] <= 1e-10
    assert metrics['equal_time_reduction']['overlap'] <= 1e-10
