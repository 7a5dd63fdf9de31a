#!/usr/bin/env python3
# encoding: utf-8

import os
import importlib

from typing import (Callable,
                    Dict,
                    List,
                    Tuple)

from qcp.common.exceptions import UnknownScenario
from qcp.common.yaml_ops import load_yaml
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

CONFIG_FILE = os.path.join(os.path.dirname(__file__), 'config.yaml')


class ScenarioRegistry(object):

    def __init__(self):
        self.scenario_specs = {}

    def register(self, name, **attrs):
        if name in self.scenario_specs.keys():
            raise Exception(f'Cannot re-register scenarios: {name}')
        self.scenario_specs[name] = dict(attrs)

    def get_scenario_info(self, name):
        if name in self.scenario_specs.keys():
            return self.scenario_specs[name]
        raise UnknownScenario(f'Cannot find scenario: {name}')

    def names(self) -> List[str]:
        return list(self.scenario_specs.keys())


registry = ScenarioRegistry()


def register(name, **attrs):
    registry.register(name, **attrs)


def catalog() -> List[Tuple[str, str, str]]:
    '''
    (name, figure, description) for every registered scenario
    '''
    return [(n, registry.scenario_specs[n].get('figure', ''), registry.scenario_specs[n].get('description', ''))
            for n in registry.names()]


def get_scenario_info(name: str) -> Tuple[Callable, Dict]:
    '''
    Args:
        name: name of the scenario
    Return:
        scenario class registered as `name`
        default config: the `general` section overlaid with the scenario's own section
    '''
    info = registry.get_scenario_info(name)
    module = info.get('module', name)
    scenario = getattr(importlib.import_module(f'qcp.scenarios.{module}'), info['scenario_class'])

    default_config = load_yaml(CONFIG_FILE)
    scenario_config = {}
    scenario_config.update(default_config.get('general') or {})
    scenario_config.update(default_config.get(name) or {})
    return scenario, scenario_config
