#!/usr/bin/env python3
# encoding: utf-8

from copy import deepcopy
from typing import (Any,
                    Dict)

from qcp.common.exceptions import ConfigError


class Config(object):
    '''
    store config parameters in this class
    self.k = v
    '''

    def __init__(self, **kwargs):
        self.add_dict(kwargs)

    @property
    def to_dict(self) -> Dict:
        d = deepcopy(self.__dict__)
        for k, v in d.items():
            if isinstance(v, Config):
                d[k] = v.to_dict
        return d

    def add_dict(self, d: Dict):
        assert isinstance(d, dict)
        for k, v in d.items():
            if isinstance(v, dict):
                setattr(self, k, Config(**v))
                continue
            setattr(self, k, v)

    def add(self, **kwargs):
        self.add_dict(kwargs)

    def get(self, k, default=None):
        '''
        dict.get(k, default_value)
        '''
        if k in self.__dict__:
            return getattr(self, k)
        return default

    def update(self, d: Dict):
        assert isinstance(d, dict)
        for k, v in d.items():
            if v is not None:
                setattr(self, k, v)

    def keys(self):
        return self.__dict__.keys()

    def has_path(self, path: str) -> bool:
        node = self
        for part in path.split('.'):
            if not isinstance(node, Config) or part not in node.__dict__:
                return False
            node = node.__dict__[part]
        return True

    def get_path(self, path: str) -> Any:
        if not self.has_path(path):
            raise ConfigError(f'unknown config key: {path}')
        node = self
        for part in path.split('.'):
            node = node.__dict__[part]
        return node

    def set_path(self, path: str, value: Any):
        '''
        Override an existing (possibly nested) key, `a.b.c` style.
        Only keys present in the defaults may be overridden.
        '''
        if not self.has_path(path):
            raise ConfigError(f'unknown config key: {path}')
        *parents, leaf = path.split('.')
        node = self
        for part in parents:
            node = node.__dict__[part]
        current = node.__dict__[leaf]
        if isinstance(current, Config):
            raise ConfigError(f'cannot override config section {path} with a scalar')
        if isinstance(current, bool) and not isinstance(value, bool):
            raise ConfigError(f'{path} expects true/false, got {value!r}')
        if isinstance(current, (int, float)) and not isinstance(current, bool):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f'{path} expects a number, got {value!r}')
            if isinstance(current, float):
                value = float(value)
        setattr(node, leaf, value)

    def __getattr__(self, name):
        '''
        self.name, raise if the key is missing
        '''
        raise AttributeError(f'{self.__class__.__name__} don\'t have this attribute: {name}')

    def __getitem__(self, x):
        return getattr(self, x)

    def __setitem__(self, x, value):
        return setattr(self, x, value)

    def __contains__(self, x):
        return x in self.__dict__

    def __eq__(self, other):
        return isinstance(other, Config) and self.to_dict == other.to_dict

    def __repr__(self):
        return '{%s}' % ',\n '.join('%r: %r' % i for i in sorted(self.to_dict.items()))
