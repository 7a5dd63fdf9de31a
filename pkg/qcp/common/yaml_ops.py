#!/usr/bin/env python3
# encoding: utf-8

import os
import yaml

from typing import (Any,
                    Dict,
                    NoReturn)

from qcp.common.exceptions import ConfigError
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)


def load_yaml(rel_filepath: str, msg: str = '') -> Dict:
    '''
    Load YAML file.
    '''
    if not os.path.exists(rel_filepath):
        raise ConfigError(f'cannot find this config: {rel_filepath}')
    with open(rel_filepath, 'r', encoding='utf-8') as f:
        x = yaml.safe_load(f.read())
    if msg != '':
        logger.info(msg)
    return x


def save_yaml(filepath: str, data: Any) -> NoReturn:
    '''
    Dump `data` as UTF-8 YAML with sorted keys, so equal data give equal bytes.
    '''
    dirname = os.path.dirname(filepath)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname)
    with open(filepath, 'w', encoding='utf-8') as fw:
        yaml.safe_dump(data, fw, sort_keys=True, default_flow_style=False, allow_unicode=True)
    logger.debug(f'save yaml to {filepath}')


def save_config(dicpath: str, config: Dict) -> NoReturn:
    save_yaml(os.path.join(dicpath, 'config.yaml'), config)
    logger.info(f'save config to {dicpath}')
