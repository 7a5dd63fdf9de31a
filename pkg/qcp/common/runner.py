#!/usr/bin/env python3
# encoding: utf-8

import os
import sys

from tqdm import tqdm
from typing import (Any,
                    Dict,
                    List,
                    Optional,
                    Sequence,
                    Tuple)

from qcp.common.config import Config
from qcp.common.exceptions import UnknownParameter
from qcp.common.yaml_ops import save_config
from qcp.common.report import (write_report_csv,
                               write_report_yaml,
                               write_sweep_csv)
from qcp.born import save_povm
from qcp.scenarios import get_scenario_info
from qcp.scenarios.base import (RUN_DEFAULTS,
                                Scenario,
                                ScenarioReport)
from qcp.tree import save_tree
from qcp.utils.display import (show_assertions,
                               show_dict)
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

bar_format = '{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}]'


def make_scenario(name: str,
                  overrides: Optional[Dict[str, Any]] = None,
                  seed: int = 0,
                  run_args: Optional[Config] = None) -> Scenario:
    '''
    Instantiate a registered scenario with its merged default config and
    `--set` style overrides applied on top.
    '''
    scenario_class, default_config = get_scenario_info(name)
    config = Config(**default_config)
    for path, value in (overrides or {}).items():
        config.set_path(path, value)
    run = None
    if run_args is not None:
        run = Config(**{k: run_args.get(k) for k in RUN_DEFAULTS if k in run_args})
    return scenario_class(name=name, seed=seed, run=run, **config.to_dict)


def write_outputs(scenario: Scenario,
                  report: ScenarioReport,
                  out_dir: str,
                  formats: Sequence[str] = ('csv', 'text'),
                  export_ensemble: bool = False) -> List[str]:
    '''
    <out_dir>/config.yaml, report.csv, report.yaml, tree.yaml, povm.yaml and ensemble.csv
    as far as the scenario declares them
    '''
    save_config(out_dir, scenario.config.to_dict)
    written = [os.path.join(out_dir, 'config.yaml')]
    if 'csv' in formats:
        written.append(os.path.join(out_dir, 'report.csv'))
        write_report_csv(written[-1], report)
    if 'text' in formats:
        written.append(os.path.join(out_dir, 'report.yaml'))
        write_report_yaml(written[-1], report)
    if scenario.setup.tree is not None:
        written.append(os.path.join(out_dir, 'tree.yaml'))
        save_tree(written[-1], scenario.setup.tree)
    if scenario.povm is not None:
        written.append(os.path.join(out_dir, 'povm.yaml'))
        save_povm(written[-1], scenario.povm)
    if export_ensemble:
        ensemble = scenario.ensemble('monotone')
        if ensemble is None:
            logger.warning(f'{scenario.name}: no ensemble to export')
        else:
            written.append(os.path.join(out_dir, 'ensemble.csv'))
            ensemble.to_csv(written[-1])
    return written


def run_scenario(name: str,
                 overrides: Optional[Dict[str, Any]] = None,
                 seed: int = 0,
                 run_args: Optional[Config] = None,
                 out_dir: Optional[str] = None,
                 formats: Sequence[str] = ('csv', 'text'),
                 export_ensemble: bool = False) -> ScenarioReport:
    scenario = make_scenario(name, overrides, seed, run_args)
    show_dict(scenario.config.to_dict)
    report = scenario.run()
    show_assertions(report.assertions)
    for note in report.notes:
        logger.info(f'note: {note}')
    if out_dir is not None:
        target = os.path.join(out_dir, name)
        for path in write_outputs(scenario, report, target, formats, export_ensemble):
            logger.info(f'wrote {path}')
    return report


def sweep(name: str,
          parameter: str,
          values: Sequence[Any],
          overrides: Optional[Dict[str, Any]] = None,
          seed: int = 0,
          run_args: Optional[Config] = None,
          out_dir: Optional[str] = None,
          progress: bool = True) -> Tuple[List[ScenarioReport], Optional[str]]:
    '''
    Run the scenario once per value of `parameter`, every run with the same seed.
    return:
        reports in the order of `values`, path of sweep_<parameter>.csv (None without out_dir)
    '''
    _, default_config = get_scenario_info(name)
    if not Config(**default_config).has_path(parameter):
        raise UnknownParameter(f'{name} has no parameter {parameter}')
    reports = []
    for value in tqdm(values, file=sys.stderr, disable=not progress, bar_format=bar_format, desc=f'{name}.{parameter}'):
        merged = dict(overrides or {})
        merged[parameter] = value
        report = make_scenario(name, merged, seed, run_args).run()
        logger.info(f'{parameter}={value}: {"passed" if report.passed else "FAILED"}')
        reports.append(report)
    path = None
    if out_dir is not None:
        path = os.path.join(out_dir, name, f'sweep_{parameter}.csv')
        write_sweep_csv(path, parameter, values, reports)
        logger.info(f'wrote {path}')
    return reports, path
