#!/usr/bin/env python3
# encoding: utf-8

import os
import csv
import numpy as np

from typing import (Any,
                    Dict,
                    Iterable,
                    List,
                    NoReturn,
                    Sequence,
                    TextIO,
                    Tuple)

from qcp.common.yaml_ops import save_yaml
from qcp.utils.sundry_utils import check_or_create
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

ASSERTION_COLUMNS = ['name', 'value', 'relation', 'target', 'tolerance', 'passed']


def format_cell(v: Any) -> str:
    '''
    17 significant digits for reals, lowercase booleans, empty for None
    '''
    if v is None:
        return ''
    if isinstance(v, (bool, np.bool_)):
        return 'true' if v else 'false'
    if isinstance(v, (float, np.floating)):
        return format(float(v), '.17g')
    return str(v)


def to_plain(data: Any) -> Any:
    '''
    numpy scalars and arrays -> python builtins, so safe_dump accepts them
    '''
    if isinstance(data, dict):
        return {str(k): to_plain(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_plain(v) for v in data]
    if isinstance(data, np.ndarray):
        return to_plain(data.tolist())
    if isinstance(data, np.generic):
        return data.item()
    return data


def _writer(filepath: str):
    dirname = os.path.dirname(filepath)
    if dirname:
        check_or_create(dirname, 'report')
    return open(filepath, 'w', newline='', encoding='utf-8')


def write_rows(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]):
    w = csv.writer(stream, lineterminator='\n')
    w.writerow(header)
    for row in rows:
        w.writerow([format_cell(v) for v in row])


def write_report_csv(filepath: str, report) -> NoReturn:
    with _writer(filepath) as f:
        write_rows(f, ASSERTION_COLUMNS, ([a.to_row()[c] for c in ASSERTION_COLUMNS] for a in report.assertions))
    logger.debug(f'save report to {filepath}')


def write_report_yaml(filepath: str, report) -> NoReturn:
    save_yaml(filepath, to_plain(report.to_dict()))


def write_catalog(stream: TextIO, catalog: List[Tuple[str, str, str]], csv_format: bool = False):
    if csv_format:
        write_rows(stream, ['name', 'figure', 'description'], catalog)
        return
    stream.write('scenario'.ljust(28) + 'figure'.ljust(10) + 'description\n')
    for name, figure, description in catalog:
        stream.write(f'{name.ljust(28)}{figure.ljust(10)}{description}\n')


def sweep_table(parameter: str, values: Sequence[Any], reports: Sequence) -> Tuple[List[str], List[List[Any]]]:
    '''
    One row per swept value: the value, the verdict and every assertion value,
    columns ordered by first appearance.
    '''
    names: Dict[str, None] = {}
    for r in reports:
        for a in r.assertions:
            names.setdefault(a.name, None)
    header = [parameter, 'passed'] + list(names)
    rows = []
    for value, r in zip(values, reports):
        found = {a.name: a.value for a in r.assertions}
        rows.append([value, r.passed] + [found.get(n) for n in names])
    return header, rows


def write_sweep_csv(filepath: str, parameter: str, values: Sequence[Any], reports: Sequence) -> NoReturn:
    header, rows = sweep_table(parameter, values, reports)
    with _writer(filepath) as f:
        write_rows(f, header, rows)
    logger.debug(f'save sweep to {filepath}')
