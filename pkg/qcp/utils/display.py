from typing import (Dict,
                    Iterable)

from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)

color2num = dict(
    gray=30,
    red=31,
    green=32,
    yellow=33,
    blue=34,
    magenta=35,
    cyan=36,
    white=37,
    crimson=38
)


def colorize(string, color='red', bold=False, highlight=False):
    """
    Wrap a string in ANSI color codes.
    """
    attr = []
    num = color2num[color]
    if highlight:
        num += 10
    attr.append(str(num))
    if bold:
        attr.append('1')
    return f'\x1b[{";".join(attr)}m{string}\x1b[0m'


def flatten_dict(data: Dict, prefix: str = '') -> Dict:
    '''
    {'a': {'b': 1}} -> {'a.b': 1}
    '''
    flat = {}
    for k, v in data.items():
        key = f'{prefix}.{k}' if prefix else str(k)
        if isinstance(v, dict):
            flat.update(flatten_dict(v, key))
        else:
            flat[key] = v
    return flat


def show_dict(data: Dict):
    '''
    log a (possibly nested) configuration as an aligned two-column table
    params:
        data: configuration to show
    '''
    logger.info('-' * 84)
    for k, v in flatten_dict(data).items():
        logger.info(''.join([str(k).rjust(40), ' | ', str(v).ljust(40)]))
    logger.info('-' * 84)


def show_assertions(rows: Iterable):
    '''
    log one colorized line per assertion record
    '''
    for row in rows:
        status = colorize('PASS', color='green') if row.passed else colorize('FAIL', color='red', bold=True)
        logger.info(f'{status} {row.name.ljust(48)} {row.describe()}')
