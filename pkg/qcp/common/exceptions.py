#!/usr/bin/env python3
# encoding: utf-8


class QcpError(Exception):
    '''
    Base class of every error raised by qcp.
    '''


# hilbert
class PacketTooNarrow(QcpError):
    pass


class PacketClipped(QcpError):
    pass


class NonCommensurateDuration(QcpError):
    pass


class SpaceMismatch(QcpError):
    pass


class NonUnitary(QcpError):
    pass


class TooFewSnapshots(QcpError):
    pass


# squant
class TimeOutsideInterval(QcpError):
    pass


class NotAPartition(QcpError):
    pass


class IntervalMismatch(QcpError):
    pass


class ProductDimensionTooLarge(QcpError):
    pass


# cournot
class BothWeightsVanish(QcpError):
    pass


class MalformedCandidate(QcpError):
    pass


class VanishingWeight(QcpError):
    pass


# classical
class ZeroProbabilityEvent(QcpError):
    pass


class OverflowGuard(QcpError):
    pass


# compat
class UnknownMethod(QcpError):
    pass


class MarginalMismatch(QcpError):
    pass


class TimeOffGrid(QcpError):
    pass


class EmptySSetList(QcpError):
    pass


# tree
class InvalidTree(QcpError):
    pass


class GridMismatch(QcpError):
    pass


class LineageAmbiguous(QcpError):
    pass


# born
class PovmInvariantError(QcpError):
    pass


class UnnormalizedState(QcpError):
    pass


# scenarios / cli
class UnknownScenario(QcpError):
    pass


class ConfigError(QcpError):
    pass


class UnknownParameter(QcpError):
    pass
