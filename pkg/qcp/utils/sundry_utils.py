#!/usr/bin/env python3
# encoding: utf-8

import os
import numpy as np

from typing import NoReturn

from qcp.utils.display import colorize
from qcp.utils.logging_utils import get_logger
logger = get_logger(__name__)


def check_or_create(dicpath: str, name: str = '') -> NoReturn:
    """
    check directory whether existing, if not then create it.
    """
    if not os.path.exists(dicpath):
        os.makedirs(dicpath)
        logger.info(colorize(
            ''.join([f'create {name} directory: ', dicpath]
                    ), color='green'))


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """
    Counter-based generator for the stream `stream` derived from `seed`.
    params:
        seed: the single run seed, a non-negative integer
        stream: integers naming the sub-stream, e.g. (tag, chunk_index)
    return:
        a numpy Generator over Philox; identical arguments give identical draws
    """
    assert seed >= 0, 'seed must be a non-negative integer.'
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(seq))


def chunk_slices(count: int, chunk_size: int):
    """
    yield (chunk_index, slice) covering range(count) in fixed-size chunks.
    """
    assert chunk_size > 0, 'chunk_size must be positive.'
    for c, start in enumerate(range(0, count, chunk_size)):
        yield c, slice(start, min(start + chunk_size, count))
