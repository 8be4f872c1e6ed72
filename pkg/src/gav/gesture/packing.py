"""Packs a frame window into a flat float64 matrix for the kernels.

Both kernel backends read the same (window_len x N_COLS) C-contiguous
array, so they see bit-identical values and agree exactly. Column order
is fixed here and mirrored by the compiled kernels.
"""

from __future__ import annotations

import numpy as np

from ..skeleton import JointId, SkeletonFrame

# Column indices. Keep in sync with _kernels.pyx.
HR_X, HR_Y, HR_Z = 0, 1, 2
HL_X, HL_Y, HL_Z = 3, 4, 5
WR_X, WL_X = 6, 7
ER_X, ER_Y = 8, 9
EL_X, EL_Y = 10, 11
SC_X, SC_Y, SC_Z = 12, 13, 14
SP_Y = 15
HD_Y = 16
N_COLS = 17


def pack_frames(frames: list[SkeletonFrame]) -> np.ndarray:
    """Lay out the detector-relevant coordinates, one row per frame."""
    out = np.empty((len(frames), N_COLS), dtype=np.float64)
    for i, frame in enumerate(frames):
        j = frame.joints
        hr = j[JointId.HAND_RIGHT]
        hl = j[JointId.HAND_LEFT]
        er = j[JointId.ELBOW_RIGHT]
        el = j[JointId.ELBOW_LEFT]
        sc = j[JointId.SHOULDER_CENTER]
        row = out[i]
        row[HR_X], row[HR_Y], row[HR_Z] = hr.x, hr.y, hr.z
        row[HL_X], row[HL_Y], row[HL_Z] = hl.x, hl.y, hl.z
        row[WR_X] = j[JointId.WRIST_RIGHT].x
        row[WL_X] = j[JointId.WRIST_LEFT].x
        row[ER_X], row[ER_Y] = er.x, er.y
        row[EL_X], row[EL_Y] = el.x, el.y
        row[SC_X], row[SC_Y], row[SC_Z] = sc.x, sc.y, sc.z
        row[SP_Y] = j[JointId.SPINE].y
        row[HD_Y] = j[JointId.HEAD].y
    return out
