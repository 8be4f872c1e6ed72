"""Sliding-window gesture detection over skeleton frame histories."""

from .detectors import (
    KERNEL_BACKEND,
    Gesture,
    detect_all,
    detect_hands_forward,
    detect_hands_up,
    detect_hands_up_folded,
    detect_left_sweep,
    detect_right_sweep,
    detect_zoom_in,
    detect_zoom_out,
)
from .history import FrameHistory, push_frame
from .params import GestureParams

__all__ = [
    "KERNEL_BACKEND",
    "Gesture",
    "GestureParams",
    "FrameHistory",
    "push_frame",
    "detect_all",
    "detect_hands_forward",
    "detect_hands_up",
    "detect_hands_up_folded",
    "detect_left_sweep",
    "detect_right_sweep",
    "detect_zoom_in",
    "detect_zoom_out",
]
