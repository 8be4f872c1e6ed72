"""Bounded chronological frame buffer feeding the detectors.

A FrameHistory is single-owner mutable state: one per session, pushed to
by that session's event loop only. Detectors read it without mutating
(detect_all updates last_detection_time when it fires).
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

from ..skeleton import SkeletonFrame
from .params import GestureParams


class FrameHistory:
    """Ring buffer of frames, oldest first, with strictly increasing timestamps."""

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self._entries: deque[SkeletonFrame] = deque(maxlen=capacity)
        self.last_detection_time: float | None = None

    @classmethod
    def for_params(cls, params: GestureParams) -> "FrameHistory":
        # Detectors need strictly more than window_len entries to fire.
        return cls(capacity=2 * params.window_len)

    def push(self, frame: SkeletonFrame) -> "FrameHistory":
        """Append a frame, evicting the oldest once capacity is exceeded."""
        if self._entries and frame.timestamp <= self._entries[-1].timestamp:
            raise ValueError(
                f"non-monotone timestamp {frame.timestamp} after {self._entries[-1].timestamp}"
            )
        self._entries.append(frame)
        return self

    @property
    def entries(self) -> tuple[SkeletonFrame, ...]:
        return tuple(self._entries)

    @property
    def newest(self) -> SkeletonFrame | None:
        return self._entries[-1] if self._entries else None

    def window(self, length: int) -> list[SkeletonFrame]:
        """The most recent `length` frames, oldest first."""
        if length > len(self._entries):
            raise ValueError(f"window of {length} exceeds {len(self._entries)} entries")
        return list(self._entries)[len(self._entries) - length:]

    def clear(self) -> None:
        self._entries.clear()
        self.last_detection_time = None

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[SkeletonFrame]:
        return iter(self._entries)


def push_frame(history: FrameHistory, frame: SkeletonFrame) -> FrameHistory:
    """Append a frame to the history (see FrameHistory.push)."""
    return history.push(frame)
