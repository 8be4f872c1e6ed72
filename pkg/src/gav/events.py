"""Events appended to a session's log.

Every accepted command and every guidance-state change appends at least
one event; rejected inputs append InvalidCommand. The log is append-only
and is the sole feed for traces, the wire protocol, and UIs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StepStatus(Enum):
    COMPLETED = "Completed"
    CURRENT = "Current"
    YET_TO_START = "YetToStart"


@dataclass(frozen=True)
class Event:
    pass


@dataclass(frozen=True)
class ModeSelectionShown(Event):
    pass


@dataclass(frozen=True)
class AssemblySelectionShown(Event):
    pass


@dataclass(frozen=True)
class PartSelectionShown(Event):
    pass


@dataclass(frozen=True)
class InstructionDisplayed(Event):
    step: int
    image: str
    text: str


@dataclass(frozen=True)
class VideoPlay(Event):
    path: str


@dataclass(frozen=True)
class InstructionRepeated(Event):
    step: int


@dataclass(frozen=True)
class Alarm(Event):
    distance: float


@dataclass(frozen=True)
class SignalGreen(Event):
    pass


@dataclass(frozen=True)
class SignalRed(Event):
    pass


@dataclass(frozen=True)
class StatusChanged(Event):
    step: int
    status: StepStatus


@dataclass(frozen=True)
class TargetReached(Event):
    step: int
    target: str  # "lift" or "put"


@dataclass(frozen=True)
class Paused(Event):
    pass


@dataclass(frozen=True)
class Resumed(Event):
    pass


@dataclass(frozen=True)
class Stopped(Event):
    pass


@dataclass(frozen=True)
class InvalidCommand(Event):
    reason: str
