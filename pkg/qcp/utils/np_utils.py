#!/usr/bin/env python3
# encoding: utf-8

import numpy as np


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def real_overlap(a: np.ndarray, b: np.ndarray) -> float:
    '''
    Re<a|b>, written so that real_overlap(a, b) == real_overlap(b, a) bit for bit.
    '''
    return float(np.sum(a.real * b.real + a.imag * b.imag))


def norm_squared(a: np.ndarray) -> float:
    return real_overlap(a, a)


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) if np.size(a) else 0.0


def unitarity_defect(u: np.ndarray) -> float:
    '''
    ||U^dagger U - 1||_max
    '''
    return max_abs_diff(u.conj().T @ u, np.eye(u.shape[0]))


def readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a
