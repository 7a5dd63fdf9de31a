#!/usr/bin/env python3
# encoding: utf-8

import time


def get_time_hhmmss(start: float) -> str:
    end = time.time()
    m, s = divmod(end - start, 60)
    h, m = divmod(m, 60)
    return "%02d:%02d:%02d" % (h, m, s)
