#!/usr/bin/env python3
# encoding: utf-8

import re
import yaml
import numpy as np

from typing import (Any,
                    Dict,
                    List,
                    Sequence,
                    Tuple)

from qcp.common.config import Config
from qcp.common.exceptions import ConfigError

# [-]<coef>[*]pi[/<den>], e.g. pi, -pi/2, 3*pi/4, 0.5pi
PI_PATTERN = re.compile(r'^\s*(?P<sign>-)?\s*(?P<coef>\d+(\.\d*)?)?\s*\*?\s*pi\s*(/\s*(?P<den>\d+(\.\d*)?))?\s*$')
FORMATS = ('csv', 'text')


def parse_value(text: Any) -> Any:
    '''
    YAML scalar parsing with `pi` expressions; lists are parsed element-wise.
    '''
    if not isinstance(text, str):
        return text
    match = PI_PATTERN.match(text)
    if match:
        value = np.pi * float(match['coef'] or 1) / float(match['den'] or 1)
        return -value if match['sign'] else value
    try:
        value = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f'cannot parse value {text!r}: {e}')
    if isinstance(value, list):
        return [parse_value(v) for v in value]
    return value


def parse_overrides(items: Sequence[str]) -> Dict[str, Any]:
    '''
    ['a.b=1', 'shutter=closed'] -> {'a.b': 1, 'shutter': 'closed'}
    '''
    overrides = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise ConfigError(f'--set expects key=value, got {item!r}')
        overrides[key.strip()] = parse_value(value.strip())
    return overrides


def parse_formats(formats: Any) -> List[str]:
    if isinstance(formats, str):
        formats = [f.strip() for f in formats.split(',') if f.strip()]
    formats = list(formats)
    unknown = [f for f in formats if f not in FORMATS]
    if unknown or not formats:
        raise ConfigError(f'output formats must be a non-empty subset of {FORMATS}, got {formats}')
    return formats


def parse_options(options: Config, default_config: Dict) -> Tuple[Config, Config]:
    '''
    Merge command-line options over the run defaults of the root config.
    return:
        run_args: seed, output directory, formats, ensemble and threshold settings
        suite_args: parameters of the property suite
    '''
    run_args = Config(**default_config['run'])
    run_args.update(dict([
        ['out', options.out],
        ['count', options.count],
        ['workers', options.workers],
        ['threshold', options.threshold],
        ['delta', options.delta],
        ['slack', options.slack]
    ]))
    if options.export_ensemble:
        run_args.export_ensemble = True
    run_args.format = parse_formats(options.format or run_args.format)
    run_args.seed = options.seed
    run_args.overrides = parse_overrides(options.set)

    assert run_args.seed >= 0, '--seed must be a non-negative integer.'
    assert run_args.count >= 0, '--count must not be negative.'
    assert run_args.workers > 0, '--workers must be positive.'
    assert 0 < run_args.threshold < 1, '--threshold must lie in (0, 1).'
    assert 0 < run_args.delta < 1, '--delta must lie in (0, 1).'

    suite_args = Config(**default_config.get('suite', {}))
    return run_args, suite_args
