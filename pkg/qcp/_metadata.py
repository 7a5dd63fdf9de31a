#!/usr/bin/env python3
# encoding: utf-8

"""
Package metadata for QCPs.
"""

# We follow Semantic Versioning (https://semver.org/)
_MAJOR_VERSION = '0'
_MINOR_VERSION = '3'
_PATCH_VERSION = '0'

# Example: '0.4.2'
__version__ = '.'.join([_MAJOR_VERSION, _MINOR_VERSION, _PATCH_VERSION])
