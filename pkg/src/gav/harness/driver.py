"""Routes speech, gestures, and frames into one session.

Shared by the replay runner and the network server so both channels get
identical semantics. The control mode gates the channels: once speech
mode is chosen, detected/injected gestures are rejected; once gesture
mode is chosen, spoken core commands are rejected. Start and the
selection phrases always pass so a session can be bootstrapped and
restarted regardless of mode.
"""

from __future__ import annotations

from ..commands import (
    Command,
    CommandKind,
    ControlMode,
    gesture_to_command,
    parse_speech_token,
)
from ..gesture import FrameHistory, Gesture, detect_all
from ..skeleton import JointId, SkeletonFrame
from ..workflow import Guiding, Session, StepActive

# Core commands carried by whichever channel (voice or gesture) is active.
_CHANNEL_GATED = frozenset(
    {
        CommandKind.PAUSE,
        CommandKind.NEXT_INSTRUCTION,
        CommandKind.MORE_DETAILS,
        CommandKind.REPEAT_INSTRUCTION,
        CommandKind.PREVIOUS_INSTRUCTION,
        CommandKind.RESUME,
        CommandKind.STOP,
    }
)


class SessionDriver:
    """Feeds one session from its input channels in arrival order."""

    def __init__(self, session: Session):
        self.session = session
        self.history = FrameHistory.for_params(session.params)

    def speech(self, text: str) -> bool:
        """Apply a spoken utterance; False if the phrase is unrecognized."""
        command = parse_speech_token(text)
        if command is None:
            return False
        self.command(command, source="speech")
        return True

    def command(self, command: Command, source: str = "speech") -> None:
        if (
            source == "speech"
            and command.kind in _CHANNEL_GATED
            and self.session.control_mode is ControlMode.GESTURE
        ):
            self.session.reject(f"spoken {command.kind.value} disabled in gesture mode")
            return
        self.session.handle_command(command)

    def gesture(self, gesture: Gesture) -> None:
        """Apply a detected or injected gesture via the command table."""
        if self.session.control_mode is ControlMode.SPEECH:
            self.session.reject(f"gesture {gesture.value} disabled in speech mode")
            return
        mode = self.session.assembly_mode
        if mode is None:
            self.session.reject(f"gesture {gesture.value} has no effect before assembly selection")
            return
        command = gesture_to_command(gesture, mode)
        if command is None:
            self.session.reject(f"gesture {gesture.value} not available in {mode.value} assembly")
            return
        self.session.handle_command(command)

    def frame(self, frame: SkeletonFrame) -> None:
        """Push a skeleton frame: run detection, then positional guidance."""
        self.history.push(frame)
        hit = detect_all(self.history, self.session.params)
        if hit is not None:
            self.gesture(hit[0])
        if isinstance(self.session.state, (Guiding, StepActive)):
            hip = frame.joints[JointId.HIP_CENTER]
            self.session.handle_position((hip.x, hip.z))
