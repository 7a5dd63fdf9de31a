#!/usr/bin/env python3
# encoding: utf-8
"""
Usage:
    run.py list [options]
    run.py run <scenario> [--set=<kv>]... [options]
    run.py sweep <scenario> <parameter> <values>... [--set=<kv>]... [options]
    run.py suite [options]
    run.py (-h | --help)

Options:
    -h,--help                   show this help
    -s,--seed=<n>               seed of every stochastic step in the run [default: 42]
    -o,--out=<dir>              directory receiving <scenario>/report.* [default: None]
    --set=<kv>                  override a scenario parameter, dotted path, repeatable, e.g. --set hwp_phase=pi/2
    -f,--format=<fmt>           comma-separated output formats out of csv,text [default: None]
    -n,--count=<n>              trajectories per ensemble, 0 skips ensembles [default: None]
    -w,--workers=<n>            threads building ensembles [default: None]
    --threshold=<x>             cournot threshold eps [default: None]
    --delta=<x>                 residence and majority delta [default: None]
    --slack=<x>                 compatibility slack [default: None]
    --export-ensemble           write the monotone-transport ensemble as ensemble.csv [default: False]
    --config-file=<file>        run defaults [default: None]
    -v,--verbose                debug logging [default: False]
    --log-file=<file>           also write the log to this file [default: None]
Example:
    python run.py list
    python run.py run mach_zehnder --set shutter=closed --seed 7
    python run.py sweep mach_zehnder hwp_phase 0 pi/2 pi --count 0
    python run.py suite --seed 7
"""

import os
import sys
import time
import logging

from typing import Dict
from docopt import docopt

from qcp.common.config import Config
from qcp.common.exceptions import (ConfigError,
                                   QcpError,
                                   UnknownParameter,
                                   UnknownScenario)
from qcp.common.report import (write_catalog,
                               write_report_csv,
                               write_report_yaml)
from qcp.common.runner import (run_scenario,
                               sweep)
from qcp.common.suite import run_suite
from qcp.common.yaml_ops import load_yaml
from qcp.parse.parse_op import (parse_options,
                                parse_value)
from qcp.scenarios import catalog
from qcp.utils.display import show_assertions
from qcp.utils.time import get_time_hhmmss
from qcp.utils.logging_utils import (get_logger,
                                     set_log_file,
                                     set_log_level)
logger = get_logger(__name__)

CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.yaml')
EXIT_PASSED, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def get_options(options: Dict) -> Config:
    '''
    Resolves command-line arguments
    params:
        options: dictionary of command-line arguments
    return:
        op: an instance of Config class that contains the parameters
    '''
    def f(k, t): return None if options[k] == 'None' else t(options[k])
    op = Config()
    op.add_dict(dict([
        ['command', next(c for c in ('list', 'run', 'sweep', 'suite') if options[c])],
        ['scenario', options['<scenario>']],
        ['parameter', options['<parameter>']],
        ['values', list(options['<values>'])],
        ['seed', int(options['--seed'])],
        ['out', f('--out', str)],
        ['set', list(options['--set'])],
        ['format', f('--format', str)],
        ['count', f('--count', int)],
        ['workers', f('--workers', int)],
        ['threshold', f('--threshold', float)],
        ['delta', f('--delta', float)],
        ['slack', f('--slack', float)],
        ['export_ensemble', bool(options['--export-ensemble'])],
        ['config_file', f('--config-file', str)],
        ['verbose', bool(options['--verbose'])],
        ['log_file', f('--log-file', str)]
    ]))
    return op


def main(argv=None) -> int:
    options = get_options(dict(docopt(__doc__, argv=argv)))
    set_log_level(logging.DEBUG if options.verbose else logging.INFO)
    set_log_file(options.log_file)

    try:
        run_args, suite_args = parse_options(options, default_config=load_yaml(options.config_file or CONFIG_FILE))
    except (ConfigError, AssertionError) as e:
        logger.error(e)
        return EXIT_CONFIG

    if options.command == 'list':
        write_catalog(sys.stdout, catalog(), csv_format=run_args.format == ['csv'])
        return EXIT_PASSED

    start = time.time()
    try:
        if options.command == 'run':
            report = run_scenario(options.scenario, run_args.overrides, run_args.seed, run_args,
                                  out_dir=run_args.out, formats=run_args.format,
                                  export_ensemble=run_args.export_ensemble)
            passed = report.passed
        elif options.command == 'sweep':
            values = [parse_value(v) for v in options.values]
            reports, _ = sweep(options.scenario, options.parameter, values, run_args.overrides,
                               run_args.seed, run_args, out_dir=run_args.out)
            passed = all(r.passed for r in reports)
        else:
            report = run_suite(run_args.seed, progress=True, **suite_args.to_dict)
            show_assertions(report.assertions)
            target = os.path.join(run_args.out, 'suite')
            if 'csv' in run_args.format:
                write_report_csv(os.path.join(target, 'report.csv'), report)
            if 'text' in run_args.format:
                write_report_yaml(os.path.join(target, 'report.yaml'), report)
            passed = report.passed
    except (UnknownScenario, UnknownParameter, ConfigError) as e:
        logger.error(e)
        return EXIT_CONFIG
    except QcpError as e:
        logger.error(f'{e.__class__.__name__}: {e}')
        return EXIT_CONFIG

    logger.info(f'{"all assertions passed" if passed else "some assertions FAILED"} in {get_time_hhmmss(start)}')
    return EXIT_PASSED if passed else EXIT_FAILED


if __name__ == "__main__":
    try:
        import colored_traceback
        colored_traceback.add_hook()
    except ImportError:
        pass
    sys.exit(main())
