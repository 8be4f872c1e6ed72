"""Tunable parameters shared by all gesture detectors."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GestureParams:
    """Detection window sizing plus the invented thresholds.

    gesture_period and fps fix the scan window: window_len =
    round(gesture_period * fps) frames. Hold-style detectors (hands up,
    hands forward) inspect the most recent half window, never fewer than
    2 frames. debounce_period is the refractory time after any detection.
    """

    gesture_period: float = 1.0
    fps: float = 30.0
    debounce_period: float = 1.0
    fold_gap: float = 0.10
    forward_reach: float = 0.35
    zoom_slack: float = 0.02

    def __post_init__(self):
        if self.gesture_period <= 0:
            raise ValueError(f"gesture_period must be positive, got {self.gesture_period}")
        if self.fps <= 0:
            raise ValueError(f"fps must be positive, got {self.fps}")
        if self.debounce_period < 0:
            raise ValueError(f"debounce_period must be >= 0, got {self.debounce_period}")
        if self.window_len < 2:
            raise ValueError(
                f"gesture_period * fps rounds to {self.window_len}; need a window of >= 2 frames"
            )

    @property
    def window_len(self) -> int:
        return int(round(self.gesture_period * self.fps))

    @property
    def hold_len(self) -> int:
        return max(2, int(round(0.5 * self.gesture_period * self.fps)))
