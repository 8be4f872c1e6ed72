"""Public gesture detectors over a FrameHistory.

The hot window scans live in a compiled extension (gav.gesture._kernels)
with a pure-Python twin (_kernels_py). The compiled module is preferred
at import; set GAV_KERNEL_BACKEND=python or =compiled to force one.
Both backends read the same packed float64 window and agree exactly.
"""

from __future__ import annotations

import os
from enum import Enum

from .history import FrameHistory
from .packing import pack_frames
from .params import GestureParams
from . import _kernels_py

_FORCED = os.environ.get("GAV_KERNEL_BACKEND", "").strip().lower()
if _FORCED == "python":
    _kernels = _kernels_py
    KERNEL_BACKEND = "python"
else:
    try:
        from . import _kernels  # type: ignore[attr-defined]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        if _FORCED == "compiled":
            raise ImportError(
                "GAV_KERNEL_BACKEND=compiled but gav.gesture._kernels is not built"
            ) from None
        _kernels = _kernels_py
        KERNEL_BACKEND = "python"


class Gesture(Enum):
    """The seven recognized control gestures."""

    HANDS_UP = "HandsUp"
    RIGHT_SWEEP = "RightSweep"
    ZOOM_IN = "ZoomIn"
    ZOOM_OUT = "ZoomOut"
    LEFT_SWEEP = "LeftSweep"
    HANDS_FORWARD = "HandsForward"
    HANDS_UP_FOLDED = "HandsUpFolded"


def _packed_window(history: FrameHistory, params: GestureParams):
    """The packed scan window, or None when history is too short.

    Every detector requires strictly more entries than the window length,
    so a freshly filled buffer of exactly window_len frames never fires.
    """
    if len(history) <= params.window_len:
        return None
    return pack_frames(history.window(params.window_len))


def detect_right_sweep(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    return False if w is None else bool(_kernels.right_sweep(w))


def detect_left_sweep(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    return False if w is None else bool(_kernels.left_sweep(w))


def detect_hands_up(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    if w is None:
        return False
    return bool(_kernels.hands_up(w[-params.hold_len:], params.fold_gap))


def detect_hands_up_folded(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    if w is None:
        return False
    return bool(_kernels.hands_up_folded(w[-params.hold_len:], params.fold_gap))


def detect_hands_forward(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    if w is None:
        return False
    return bool(_kernels.hands_forward(w[-params.hold_len:], params.forward_reach))


def detect_zoom_in(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    return False if w is None else bool(_kernels.zoom_in(w, params.zoom_slack))


def detect_zoom_out(history: FrameHistory, params: GestureParams) -> bool:
    w = _packed_window(history, params)
    return False if w is None else bool(_kernels.zoom_out(w, params.zoom_slack))


def detect_all(history: FrameHistory, params: GestureParams) -> tuple[Gesture, float] | None:
    """Run all detectors in priority order; first hit wins.

    Priority resolves the fold/unfold ambiguity toward the folded (stop)
    gesture, then the other hold poses, then the motion gestures. Returns
    (gesture, timestamp of the newest frame) and records that timestamp
    on the history for debouncing, or None if nothing fired or the
    debounce window is still open.
    """
    newest = history.newest
    if newest is None:
        return None
    if (
        history.last_detection_time is not None
        and newest.timestamp - history.last_detection_time < params.debounce_period
    ):
        return None
    w = _packed_window(history, params)
    if w is None:
        return None
    hold = w[-params.hold_len:]
    checks = (
        (Gesture.HANDS_UP_FOLDED, lambda: _kernels.hands_up_folded(hold, params.fold_gap)),
        (Gesture.HANDS_UP, lambda: _kernels.hands_up(hold, params.fold_gap)),
        (Gesture.HANDS_FORWARD, lambda: _kernels.hands_forward(hold, params.forward_reach)),
        (Gesture.RIGHT_SWEEP, lambda: _kernels.right_sweep(w)),
        (Gesture.LEFT_SWEEP, lambda: _kernels.left_sweep(w)),
        (Gesture.ZOOM_IN, lambda: _kernels.zoom_in(w, params.zoom_slack)),
        (Gesture.ZOOM_OUT, lambda: _kernels.zoom_out(w, params.zoom_slack)),
    )
    for gesture, check in checks:
        if check():
            history.last_detection_time = newest.timestamp
            return gesture, newest.timestamp
    return None
