"""Control-command alphabet: speech phrase parsing and gesture mapping.

Eight core commands drive a session (start, pause, next/previous
instruction, more details, repeat, resume, stop); selection commands pick
the control mode, the assembly mode, and a part. Matching is exact phrase
after case/whitespace normalization — confidence scoring and fuzzy
matching belong to the speech engine, not here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .gesture import Gesture


class AssemblyMode(Enum):
    FULL = "Full"
    PART = "Part"


class ControlMode(Enum):
    SPEECH = "Speech"
    GESTURE = "Gesture"


class CommandKind(Enum):
    START = "Start"
    PAUSE = "Pause"
    NEXT_INSTRUCTION = "NextInstruction"
    MORE_DETAILS = "MoreDetails"
    REPEAT_INSTRUCTION = "RepeatInstruction"
    PREVIOUS_INSTRUCTION = "PreviousInstruction"
    RESUME = "Resume"
    STOP = "Stop"
    SELECT_SPEECH_MODE = "SelectSpeechMode"
    SELECT_GESTURE_MODE = "SelectGestureMode"
    SELECT_FULL_ASSEMBLY = "SelectFullAssembly"
    SELECT_PART_ASSEMBLY = "SelectPartAssembly"
    SELECT_PART = "SelectPart"


@dataclass(frozen=True)
class Command:
    kind: CommandKind
    part_id: int | None = None

    def __post_init__(self):
        if (self.kind is CommandKind.SELECT_PART) != (self.part_id is not None):
            raise ValueError("part_id is required for SelectPart and only for it")
        if self.part_id is not None and self.part_id < 1:
            raise ValueError(f"part_id must be >= 1, got {self.part_id}")


START = Command(CommandKind.START)
PAUSE = Command(CommandKind.PAUSE)
NEXT_INSTRUCTION = Command(CommandKind.NEXT_INSTRUCTION)
MORE_DETAILS = Command(CommandKind.MORE_DETAILS)
REPEAT_INSTRUCTION = Command(CommandKind.REPEAT_INSTRUCTION)
PREVIOUS_INSTRUCTION = Command(CommandKind.PREVIOUS_INSTRUCTION)
RESUME = Command(CommandKind.RESUME)
STOP = Command(CommandKind.STOP)
SELECT_SPEECH_MODE = Command(CommandKind.SELECT_SPEECH_MODE)
SELECT_GESTURE_MODE = Command(CommandKind.SELECT_GESTURE_MODE)
SELECT_FULL_ASSEMBLY = Command(CommandKind.SELECT_FULL_ASSEMBLY)
SELECT_PART_ASSEMBLY = Command(CommandKind.SELECT_PART_ASSEMBLY)


def select_part(part_id: int) -> Command:
    return Command(CommandKind.SELECT_PART, part_id=part_id)


_PHRASES: dict[str, Command] = {
    "start": START,
    "pause": PAUSE,
    "next instruction": NEXT_INSTRUCTION,
    "next command": NEXT_INSTRUCTION,  # spoken synonym
    "more details": MORE_DETAILS,
    "repeat instruction": REPEAT_INSTRUCTION,
    "previous instruction": PREVIOUS_INSTRUCTION,
    "resume": RESUME,
    "stop": STOP,
    "speech mode": SELECT_SPEECH_MODE,
    "gesture mode": SELECT_GESTURE_MODE,
    "full assembly": SELECT_FULL_ASSEMBLY,
    "part assembly": SELECT_PART_ASSEMBLY,
}

_PART_PHRASE = re.compile(r"^part ([0-9]+)$")


def parse_speech_token(text: str) -> Command | None:
    """Match an utterance against the phrase set; None if unrecognized."""
    normalized = " ".join(text.lower().split())
    command = _PHRASES.get(normalized)
    if command is not None:
        return command
    m = _PART_PHRASE.match(normalized)
    if m:
        part_id = int(m.group(1))
        if part_id >= 1:
            return select_part(part_id)
    return None


# Gesture -> (command, modes in which the gesture is active). The sweeps
# step between instructions and only exist in full assembly; everything
# else works in both modes. No gesture maps to Start: a session starts by
# the spoken command alone.
_GESTURE_TABLE: dict[Gesture, tuple[Command, frozenset[AssemblyMode]]] = {
    Gesture.HANDS_UP: (PAUSE, frozenset({AssemblyMode.FULL, AssemblyMode.PART})),
    Gesture.RIGHT_SWEEP: (NEXT_INSTRUCTION, frozenset({AssemblyMode.FULL})),
    Gesture.ZOOM_IN: (MORE_DETAILS, frozenset({AssemblyMode.FULL, AssemblyMode.PART})),
    Gesture.ZOOM_OUT: (REPEAT_INSTRUCTION, frozenset({AssemblyMode.FULL, AssemblyMode.PART})),
    Gesture.LEFT_SWEEP: (PREVIOUS_INSTRUCTION, frozenset({AssemblyMode.FULL})),
    Gesture.HANDS_FORWARD: (RESUME, frozenset({AssemblyMode.FULL, AssemblyMode.PART})),
    Gesture.HANDS_UP_FOLDED: (STOP, frozenset({AssemblyMode.FULL, AssemblyMode.PART})),
}


def gesture_to_command(gesture: Gesture, mode: AssemblyMode) -> Command | None:
    """The command a gesture triggers in the given assembly mode, if any."""
    command, modes = _GESTURE_TABLE[gesture]
    return command if mode in modes else None
