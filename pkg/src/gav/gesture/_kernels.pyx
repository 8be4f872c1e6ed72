# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gesture kernels; semantics match _kernels_py exactly.

Column constants are duplicated from packing.py so the hot loops stay
free of Python attribute lookups.
"""

from libc.math cimport fabs, sqrt

cdef enum:
    HR_X = 0
    HR_Y = 1
    HR_Z = 2
    HL_X = 3
    HL_Y = 4
    HL_Z = 5
    WR_X = 6
    WL_X = 7
    ER_X = 8
    ER_Y = 9
    EL_X = 10
    EL_Y = 11
    SC_X = 12
    SC_Y = 13
    SC_Z = 14
    SP_Y = 15
    HD_Y = 16


def right_sweep(double[:, :] w):
    cdef Py_ssize_t i, n = w.shape[0]
    cdef double start = w[0, HR_X]
    cdef double rise = w[0, SC_Y] - w[0, SP_Y]
    for i in range(n):
        if w[i, HR_Y] > w[i, HD_Y]:
            return False
        if w[i, HR_X] < w[i, WR_X]:
            return False
        if w[i, ER_X] > w[i, HR_X]:
            return False
        if w[i, HR_X] > w[i, SC_X]:
            if w[i, ER_Y] > w[i, HR_Y]:
                if w[i, HR_Y] > w[i, SC_Y]:
                    if w[i, HR_X] > start + rise:
                        return True
    return False


def left_sweep(double[:, :] w):
    cdef Py_ssize_t i, n = w.shape[0]
    cdef double start = w[0, HL_X]
    cdef double rise = w[0, SC_Y] - w[0, SP_Y]
    for i in range(n):
        if w[i, HL_Y] > w[i, HD_Y]:
            return False
        if w[i, HL_X] > w[i, WL_X]:
            return False
        if w[i, EL_X] < w[i, HL_X]:
            return False
        if w[i, HL_X] < w[i, SC_X]:
            if w[i, EL_Y] > w[i, HL_Y]:
                if w[i, HL_Y] > w[i, SC_Y]:
                    if w[i, HL_X] < start - rise:
                        return True
    return False


cdef bint _both_hands_above_head(double[:, :] w):
    cdef Py_ssize_t i
    for i in range(w.shape[0]):
        if not (w[i, HL_Y] > w[i, HD_Y] and w[i, HR_Y] > w[i, HD_Y]):
            return False
    return True


cdef bint _folded(double[:, :] w, double fold_gap):
    cdef Py_ssize_t i
    if not _both_hands_above_head(w):
        return False
    for i in range(w.shape[0]):
        if not fabs(w[i, HL_X] - w[i, HR_X]) < fold_gap:
            return False
    return True


def hands_up_folded(double[:, :] w, double fold_gap):
    return _folded(w, fold_gap)


def hands_up(double[:, :] w, double fold_gap):
    return _both_hands_above_head(w) and not _folded(w, fold_gap)


def hands_forward(double[:, :] w, double forward_reach):
    cdef Py_ssize_t i
    for i in range(w.shape[0]):
        if not (w[i, SC_Z] - w[i, HR_Z] > forward_reach):
            return False
        if not (w[i, SC_Z] - w[i, HL_Z] > forward_reach):
            return False
        if not (w[i, SP_Y] < w[i, HR_Y] < w[i, HD_Y]):
            return False
        if not (w[i, SP_Y] < w[i, HL_Y] < w[i, HD_Y]):
            return False
    return True


cdef double _hand_gap(double[:, :] w, Py_ssize_t i):
    cdef double dx = w[i, HR_X] - w[i, HL_X]
    cdef double dy = w[i, HR_Y] - w[i, HL_Y]
    cdef double dz = w[i, HR_Z] - w[i, HL_Z]
    return sqrt(dx * dx + dy * dy + dz * dz)


cdef bint _hands_in_torso_band(double[:, :] w):
    cdef Py_ssize_t i
    for i in range(w.shape[0]):
        if not (w[i, SP_Y] < w[i, HR_Y] < w[i, HD_Y]):
            return False
        if not (w[i, SP_Y] < w[i, HL_Y] < w[i, HD_Y]):
            return False
    return True


def zoom_in(double[:, :] w, double slack):
    cdef Py_ssize_t i, n = w.shape[0]
    cdef double rise, prev, first, cur
    if not _hands_in_torso_band(w):
        return False
    rise = w[0, SC_Y] - w[0, SP_Y]
    prev = _hand_gap(w, 0)
    first = prev
    for i in range(1, n):
        cur = _hand_gap(w, i)
        if cur < prev - slack:
            return False
        prev = cur
    return prev - first > rise


def zoom_out(double[:, :] w, double slack):
    cdef Py_ssize_t i, n = w.shape[0]
    cdef double rise, prev, first, cur
    if not _hands_in_torso_band(w):
        return False
    rise = w[0, SC_Y] - w[0, SP_Y]
    prev = _hand_gap(w, 0)
    first = prev
    for i in range(1, n):
        cur = _hand_gap(w, i)
        if cur > prev + slack:
            return False
        prev = cur
    return first - prev > rise
