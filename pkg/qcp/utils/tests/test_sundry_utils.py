import logging

import numpy as np

from qcp.common.config import Config
from qcp.common.decorator import (lazy_property,
                                  locked_memo)
from qcp.utils.display import flatten_dict
from qcp.utils.logging_utils import (get_logger,
                                     set_log_file,
                                     set_log_level)
from qcp.utils.sundry_utils import (check_or_create,
                                    chunk_slices,
                                    make_rng)


def test_streams_are_reproducible_and_distinct():
    a = make_rng(7, 3, 0).random(5)
    assert np.array_equal(a, make_rng(7, 3, 0).random(5))
    assert not np.array_equal(a, make_rng(7, 3, 1).random(5))
    assert not np.array_equal(a, make_rng(8, 3, 0).random(5))


def test_chunk_slices_cover_range():
    chunks = list(chunk_slices(10, 4))
    assert [c for c, _ in chunks] == [0, 1, 2]
    assert [(s.start, s.stop) for _, s in chunks] == [(0, 4), (4, 8), (8, 10)]
    assert list(chunk_slices(0, 4)) == []


def test_check_or_create(tmp_path):
    target = tmp_path / 'a' / 'b'
    check_or_create(str(target), 'test')
    assert target.is_dir()
    check_or_create(str(target), 'test')


def test_lazy_property_and_memo():
    class Counted(object):
        calls = 0

        @lazy_property
        def value(self):
            Counted.calls += 1
            return 42

        @locked_memo(key=lambda t: round(t, 12))
        def square(self, t):
            Counted.calls += 1
            return t * t

    p = Counted()
    assert p.value == 42 and p.value == 42
    assert p.square(3.0) == 9.0 and p.square(3.0) == 9.0
    assert Counted.calls == 2
    assert Counted.square.cache_size(p) == 1


def test_memo_keeps_recent_entries():
    class Counted(object):
        calls = 0

        @locked_memo(key=lambda t: t, maxsize=3)
        def double(self, t):
            Counted.calls += 1
            return 2 * t

    c = Counted()
    for t in range(10):
        assert c.double(t) == 2 * t
        assert Counted.double.cache_size(c) <= 3
    assert Counted.calls == 10
    c.double(8)
    assert Counted.calls == 10
    c.double(0)
    assert Counted.calls == 11
    # 0 and 8 were used last, 7 was evicted
    c.double(8)
    c.double(7)
    assert Counted.calls == 12
    assert Counted.double.cache_size(c) == 3


def test_config_paths():
    c = Config(a=Config(b=1.0), flag=True, name='x')
    c.set_path('a.b', 2)
    assert c.get_path('a.b') == 2.0 and isinstance(c.a.b, float)
    assert c.has_path('a.b') and not c.has_path('a.c')
    assert flatten_dict(c.to_dict) == {'a.b': 2.0, 'flag': True, 'name': 'x'}


def test_log_file_receives_records(tmp_path):
    set_log_level(logging.INFO)
    path = tmp_path / 'run.log'
    set_log_file(str(path))
    get_logger('qcp.tests.logging').info('hello from the test')
    assert 'hello from the test' in path.read_text(encoding='utf-8')
