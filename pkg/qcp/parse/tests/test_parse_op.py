import numpy as np
import pytest

from qcp.common.config import Config
from qcp.common.exceptions import ConfigError
from qcp.parse.parse_op import (parse_formats,
                                parse_options,
                                parse_overrides,
                                parse_value)

DEFAULTS = dict(run=dict(out='./results', format=['csv', 'text'], count=100000, workers=1,
                         threshold=0.001, delta=0.001, slack=None, export_ensemble=False),
                suite=dict(meta_trials=10000))


def test_pi_expressions():
    assert parse_value('pi') == np.pi
    assert parse_value('pi/2') == np.pi / 2
    assert parse_value('3*pi/4') == 3 * np.pi / 4
    assert parse_value('-pi/2') == -np.pi / 2
    assert parse_value('0.5pi') == 0.5 * np.pi


def test_yaml_scalars():
    assert parse_value('closed') == 'closed'
    assert parse_value('0.25') == 0.25
    assert parse_value('3') == 3
    assert parse_value('true') is True
    assert parse_value('[0, pi/2]') == [0, np.pi / 2]


def test_overrides():
    assert parse_overrides(['shutter=closed', 'hwp_phase=pi']) == {'shutter': 'closed', 'hwp_phase': np.pi}
    assert parse_overrides(None) == {}
    with pytest.raises(ConfigError):
        parse_overrides(['shutter'])


def test_formats():
    assert parse_formats('csv') == ['csv']
    assert parse_formats('csv,text') == ['csv', 'text']
    with pytest.raises(ConfigError):
        parse_formats('json')


def _options(**kwargs):
    op = dict(out=None, count=None, workers=None, threshold=None, delta=None, slack=None,
              export_ensemble=False, format=None, seed=7, set=[])
    op.update(kwargs)
    return Config(**op)


def test_cli_options_override_defaults():
    run_args, suite_args = parse_options(_options(count=0, format='csv', set=['shutter=closed']), DEFAULTS)
    assert run_args.count == 0
    assert run_args.workers == 1
    assert run_args.format == ['csv']
    assert run_args.seed == 7
    assert run_args.overrides == {'shutter': 'closed'}
    assert suite_args.meta_trials == 10000


def test_bad_threshold():
    with pytest.raises(AssertionError):
        parse_options(_options(threshold=2.0), DEFAULTS)
