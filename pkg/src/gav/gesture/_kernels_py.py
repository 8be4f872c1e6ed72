"""Pure-Python gesture kernels; fallback when the compiled module is absent.

Every kernel takes the packed window from packing.pack_frames (rows are
chronological, oldest first) and must stay semantically identical to its
counterpart in _kernels.pyx — the backends are required to agree exactly.
"""

from __future__ import annotations

import math

from .packing import (
    EL_X,
    EL_Y,
    ER_X,
    ER_Y,
    HD_Y,
    HL_X,
    HL_Y,
    HL_Z,
    HR_X,
    HR_Y,
    HR_Z,
    SC_X,
    SC_Y,
    SC_Z,
    SP_Y,
    WL_X,
    WR_X,
)


def right_sweep(w) -> bool:
    """Lateral right-hand travel beyond the torso-rise threshold.

    The hand must stay below the head, ahead of its wrist in x and right
    of the elbow in x throughout; it fires once the hand is right of the
    shoulder center, below the elbow, above the shoulder center, and has
    travelled more than the shoulder-to-spine rise past its window-start x.
    """
    n = w.shape[0]
    start = w[0, HR_X]
    rise = w[0, SC_Y] - w[0, SP_Y]
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


def left_sweep(w) -> bool:
    """Mirror image of right_sweep for the left hand (x negated)."""
    n = w.shape[0]
    start = w[0, HL_X]
    rise = w[0, SC_Y] - w[0, SP_Y]
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


def _both_hands_above_head(w) -> bool:
    for i in range(w.shape[0]):
        if not (w[i, HL_Y] > w[i, HD_Y] and w[i, HR_Y] > w[i, HD_Y]):
            return False
    return True


def hands_up_folded(w, fold_gap: float) -> bool:
    """Both hands held above the head with wrists together."""
    if not _both_hands_above_head(w):
        return False
    for i in range(w.shape[0]):
        if not abs(w[i, HL_X] - w[i, HR_X]) < fold_gap:
            return False
    return True


def hands_up(w, fold_gap: float) -> bool:
    """Both hands held above the head, apart (not the folded variant)."""
    return _both_hands_above_head(w) and not hands_up_folded(w, fold_gap)


def hands_forward(w, forward_reach: float) -> bool:
    """Both hands held torso-height and reaching toward the sensor."""
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


def _hand_gap(w, i: int) -> float:
    dx = w[i, HR_X] - w[i, HL_X]
    dy = w[i, HR_Y] - w[i, HL_Y]
    dz = w[i, HR_Z] - w[i, HL_Z]
    return math.sqrt(dx * dx + dy * dy + dz * dz)


def _hands_in_torso_band(w) -> bool:
    for i in range(w.shape[0]):
        if not (w[i, SP_Y] < w[i, HR_Y] < w[i, HD_Y]):
            return False
        if not (w[i, SP_Y] < w[i, HL_Y] < w[i, HD_Y]):
            return False
    return True


def zoom_in(w, slack: float) -> bool:
    """Hand separation growing by more than the torso rise over the window."""
    if not _hands_in_torso_band(w):
        return False
    n = w.shape[0]
    rise = w[0, SC_Y] - w[0, SP_Y]
    prev = _hand_gap(w, 0)
    first = prev
    for i in range(1, n):
        cur = _hand_gap(w, i)
        if cur < prev - slack:
            return False
        prev = cur
    return prev - first > rise


def zoom_out(w, slack: float) -> bool:
    """Hand separation shrinking by more than the torso rise over the window."""
    if not _hands_in_torso_band(w):
        return False
    n = w.shape[0]
    rise = w[0, SC_Y] - w[0, SP_Y]
    prev = _hand_gap(w, 0)
    first = prev
    for i in range(1, n):
        cur = _hand_gap(w, i)
        if cur > prev + slack:
            return False
        prev = cur
    return first - prev > rise
