#!/usr/bin/env python3
# encoding: utf-8

import functools
import threading

from collections import OrderedDict
from typing import (Callable,
                    Optional)


def lazy_property(func):
    attribute = '_lazy_' + func.__name__

    @property
    @functools.wraps(func)
    def wrapper(self):
        if not hasattr(self, attribute):
            object.__setattr__(self, attribute, func(self))
        return getattr(self, attribute)
    return wrapper


def locked_memo(key: Callable, maxsize: Optional[int] = None):
    '''
    Per-instance memo for methods, safe under concurrent readers.
    Each key is materialized once: the first caller computes while later
    callers for the same key wait on that key's lock. With `maxsize` the
    memo keeps the most recently used entries only.
    params:
        key: maps the method arguments (without self) to a hashable cache key
        maxsize: entry cap per instance, None for unbounded
    '''
    assert maxsize is None or maxsize > 0, 'maxsize must be positive.'

    def decorator(method):
        store_name = '_memo_' + method.__name__

        def _store(self):
            store = self.__dict__.get(store_name)
            if store is None:
                with _GLOBAL_LOCK:
                    store = self.__dict__.get(store_name)
                    if store is None:
                        store = (OrderedDict(), {}, threading.Lock())
                        object.__setattr__(self, store_name, store)
            return store

        def _lookup(values, k):
            if k in values:
                values.move_to_end(k)
                return True, values[k]
            return False, None

        @functools.wraps(method)
        def wrapper(self, *args):
            values, locks, guard = _store(self)
            k = key(*args)
            with guard:
                hit, value = _lookup(values, k)
                if hit:
                    return value
                lock = locks.setdefault(k, threading.Lock())
            with lock:
                with guard:
                    hit, value = _lookup(values, k)
                if hit:
                    return value
                value = method(self, *args)
                with guard:
                    values[k] = value
                    while maxsize is not None and len(values) > maxsize:
                        old, _ = values.popitem(last=False)
                        locks.pop(old, None)
            return value

        def cache_size(self):
            return len(_store(self)[0])
        wrapper.cache_size = cache_size
        return wrapper
    return decorator


_GLOBAL_LOCK = threading.Lock()
