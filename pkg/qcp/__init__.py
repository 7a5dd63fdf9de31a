#!/usr/bin/env python3
# encoding: utf-8

from qcp._metadata import __version__
