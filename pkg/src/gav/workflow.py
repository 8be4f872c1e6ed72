"""Guided-assembly session state machine.

A session walks an operator through the parts of a database: select a
control mode and an assembly mode, then per part be guided to the pickup
coordinate, then the installation coordinate, then perform the step.
Positional guidance raises an alarm when the operator strays out of
range; tool checks compare depth-image change against a tool mask.

States: Idle -> AwaitingControlMode -> AwaitingAssemblyMode ->
(AwaitingPartSelection ->)? Guiding(step, ToLift|ToPut) -> StepActive(step)
-> ... -> Finished, with Paused wrapping any non-idle state. Commands not
listed for the current state append an InvalidCommand event and change
nothing; Stop finishes from anywhere; Start from Finished re-initializes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from . import events as ev
from .commands import AssemblyMode, Command, CommandKind, ControlMode
from .gesture import GestureParams
from .partsdb import PartsDb, validate_db


class GuidePhase(Enum):
    TO_LIFT = "ToLift"
    TO_PUT = "ToPut"


@dataclass(frozen=True)
class Idle:
    pass


@dataclass(frozen=True)
class AwaitingControlMode:
    pass


@dataclass(frozen=True)
class AwaitingAssemblyMode:
    pass


@dataclass(frozen=True)
class AwaitingPartSelection:
    pass


@dataclass(frozen=True)
class Guiding:
    step: int
    phase: GuidePhase


@dataclass(frozen=True)
class StepActive:
    step: int


@dataclass(frozen=True)
class Paused:
    resumes_to: "SessionState"


@dataclass(frozen=True)
class Finished:
    pass


SessionState = Union[
    Idle,
    AwaitingControlMode,
    AwaitingAssemblyMode,
    AwaitingPartSelection,
    Guiding,
    StepActive,
    Paused,
    Finished,
]


def state_name(state: SessionState) -> str:
    return type(state).__name__


class Signal(Enum):
    GREEN = "Green"
    RED = "Red"


def verify_tool(
    before,
    during,
    template,
    threshold: float = 0.7,
    depth_delta: float = 30.0,
) -> Signal:
    """Compare the changed depth region against a tool mask.

    before/during are depth grids in millimeters, template a boolean mask
    of the expected tool footprint, all with identical dimensions. Cells
    whose depth changed by more than depth_delta form the difference
    mask; the check is green when the intersection-over-union of that
    mask with the template reaches the threshold.
    """
    before = np.asarray(before, dtype=np.float64)
    during = np.asarray(during, dtype=np.float64)
    template = np.asarray(template, dtype=bool)
    if before.shape != during.shape or before.shape != template.shape:
        raise ValueError(
            f"dimension mismatch: before {before.shape}, during {during.shape}, "
            f"template {template.shape}"
        )
    diff = np.abs(during - before) > depth_delta
    union = int(np.count_nonzero(diff | template))
    if union == 0:
        similarity = 0.0
    else:
        similarity = int(np.count_nonzero(diff & template)) / union
    return Signal.GREEN if similarity >= threshold else Signal.RED


class Session:
    """Single-owner mutable session; drive it from one event loop only."""

    def __init__(
        self,
        db: PartsDb,
        params: GestureParams | None = None,
        range_radius: float = 1.5,
        arrival_radius: float = 0.3,
    ):
        violations = validate_db(db)
        if violations:
            raise ValueError(f"invalid part database: {'; '.join(violations)}")
        if not db.parts:
            raise ValueError("part database is empty")
        if range_radius <= 0:
            raise ValueError(f"range_radius must be positive, got {range_radius}")
        if arrival_radius <= 0:
            raise ValueError(f"arrival_radius must be positive, got {arrival_radius}")
        self.db = db
        self.params = params if params is not None else GestureParams()
        self.range_radius = range_radius
        self.arrival_radius = arrival_radius
        self.control_mode: ControlMode | None = None
        self.assembly_mode: AssemblyMode | None = None
        self.state: SessionState = Idle()
        self.statuses: list[ev.StepStatus] = [ev.StepStatus.YET_TO_START] * len(db.parts)
        self._events: list[ev.Event] = []

    @property
    def events(self) -> tuple[ev.Event, ...]:
        return tuple(self._events)

    def _emit(self, event: ev.Event) -> None:
        self._events.append(event)

    def reject(self, reason: str) -> None:
        """Record a rejected input without touching the state."""
        self._emit(ev.InvalidCommand(reason))

    # -- command handling ------------------------------------------------

    def handle_command(self, cmd: Command) -> "Session":
        """Apply one command; always appends at least one event."""
        kind = cmd.kind
        state = self.state

        if kind is CommandKind.STOP:
            self.state = Finished()
            self._emit(ev.Stopped())
            return self

        if kind is CommandKind.START:
            if isinstance(state, (Idle, Finished)):
                self._reinitialize()
                self.state = AwaitingControlMode()
                self._emit(ev.ModeSelectionShown())
            else:
                self.reject(f"Start not available in {state_name(state)}")
            return self

        if isinstance(state, Paused):
            if kind is CommandKind.RESUME:
                self.state = state.resumes_to
                self._emit(ev.Resumed())
            else:
                self.reject(f"{kind.value} not available while paused")
            return self

        if kind is CommandKind.PAUSE:
            if isinstance(state, Idle):
                self.reject("Pause not available in Idle")
            else:
                self.state = Paused(resumes_to=state)
                self._emit(ev.Paused())
            return self

        if kind is CommandKind.RESUME:
            self.reject(f"Resume not available in {state_name(state)}")
            return self

        if isinstance(state, AwaitingControlMode):
            if kind is CommandKind.SELECT_SPEECH_MODE:
                self._select_control(ControlMode.SPEECH)
            elif kind is CommandKind.SELECT_GESTURE_MODE:
                self._select_control(ControlMode.GESTURE)
            else:
                self.reject(f"{kind.value} not available while selecting control mode")
            return self

        if isinstance(state, AwaitingAssemblyMode):
            if kind is CommandKind.SELECT_FULL_ASSEMBLY:
                self.assembly_mode = AssemblyMode.FULL
                self._enter_step(0)
            elif kind is CommandKind.SELECT_PART_ASSEMBLY:
                self.assembly_mode = AssemblyMode.PART
                self.state = AwaitingPartSelection()
                self._emit(ev.PartSelectionShown())
            else:
                self.reject(f"{kind.value} not available while selecting assembly mode")
            return self

        if isinstance(state, AwaitingPartSelection):
            if kind is CommandKind.SELECT_PART:
                step = self.db.step_of(cmd.part_id)
                if step is None:
                    self.reject(f"unknown part id {cmd.part_id}")
                else:
                    self._enter_step(step)
            else:
                self.reject(f"{kind.value} not available while selecting a part")
            return self

        if isinstance(state, (Guiding, StepActive)):
            step = state.step
            if kind is CommandKind.MORE_DETAILS:
                self._emit(ev.VideoPlay(self.db.parts[step].video_path))
            elif kind is CommandKind.REPEAT_INSTRUCTION:
                self._emit(ev.InstructionRepeated(step))
                self._emit(self._instruction_event(state))
            elif kind is CommandKind.NEXT_INSTRUCTION and isinstance(state, StepActive):
                self._complete_and_advance(step)
            elif kind is CommandKind.PREVIOUS_INSTRUCTION and isinstance(state, StepActive):
                self._step_back(step)
            else:
                self.reject(f"{kind.value} not available in {state_name(state)}")
            return self

        self.reject(f"{kind.value} not available in {state_name(state)}")
        return self

    def _reinitialize(self) -> None:
        self.control_mode = None
        self.assembly_mode = None
        self.statuses = [ev.StepStatus.YET_TO_START] * len(self.db.parts)

    def _select_control(self, mode: ControlMode) -> None:
        self.control_mode = mode
        self.state = AwaitingAssemblyMode()
        self._emit(ev.AssemblySelectionShown())

    def _set_status(self, step: int, status: ev.StepStatus) -> None:
        self.statuses[step] = status
        self._emit(ev.StatusChanged(step, status))

    def _enter_step(self, step: int) -> None:
        self._set_status(step, ev.StepStatus.CURRENT)
        self.state = Guiding(step, GuidePhase.TO_LIFT)
        part = self.db.parts[step]
        self._emit(ev.InstructionDisplayed(step, part.image1, part.commands_lift))

    def _instruction_event(self, state: Guiding | StepActive) -> ev.InstructionDisplayed:
        part = self.db.parts[state.step]
        if isinstance(state, Guiding) and state.phase is GuidePhase.TO_LIFT:
            return ev.InstructionDisplayed(state.step, part.image1, part.commands_lift)
        return ev.InstructionDisplayed(state.step, part.image2, part.commands_put)

    def _complete_and_advance(self, step: int) -> None:
        if self.assembly_mode is AssemblyMode.FULL:
            self._set_status(step, ev.StepStatus.COMPLETED)
            if step + 1 < len(self.db.parts):
                self._enter_step(step + 1)
            else:
                # Last step done: the session stops itself.
                self.state = Finished()
                self._emit(ev.Stopped())
        else:
            # Part mode: the chosen part is done; back to part selection.
            self._set_status(step, ev.StepStatus.COMPLETED)
            self.state = AwaitingPartSelection()
            self._emit(ev.PartSelectionShown())

    def _step_back(self, step: int) -> None:
        if self.assembly_mode is not AssemblyMode.FULL:
            self.reject("PreviousInstruction only available in full assembly")
        elif step == 0:
            self.reject("no previous instruction at the first step")
        else:
            self._set_status(step, ev.StepStatus.YET_TO_START)
            self._enter_step(step - 1)

    # -- positional guidance ----------------------------------------------

    def handle_position(self, position: tuple[float, float]) -> "Session":
        """Update guidance with the operator's floor-plane (x, z) position."""
        state = self.state
        if not isinstance(state, (Guiding, StepActive)):
            self.reject(f"position update not applicable in {state_name(state)}")
            return self
        part = self.db.parts[state.step]
        if isinstance(state, Guiding) and state.phase is GuidePhase.TO_LIFT:
            target = part.lift
        else:
            target = part.put
        distance = math.hypot(position[0] - target[0], position[1] - target[1])
        if distance > self.range_radius:
            self._emit(ev.Alarm(distance))
        elif isinstance(state, Guiding) and distance <= self.arrival_radius:
            if state.phase is GuidePhase.TO_LIFT:
                self.state = Guiding(state.step, GuidePhase.TO_PUT)
                self._emit(ev.TargetReached(state.step, "lift"))
                self._emit(
                    ev.InstructionDisplayed(state.step, part.image2, part.commands_put)
                )
            else:
                self.state = StepActive(state.step)
                self._emit(ev.TargetReached(state.step, "put"))
        return self

    # -- tool verification -------------------------------------------------

    def verify_tool(self, before, during, template, threshold: float = 0.7,
                    depth_delta: float = 30.0) -> Signal:
        """Run a tool check and record the resulting signal."""
        signal = verify_tool(before, during, template, threshold, depth_delta)
        self._emit(ev.SignalGreen() if signal is Signal.GREEN else ev.SignalRed())
        return signal

    # -- views ---------------------------------------------------------------

    def step_statuses(self) -> list[tuple[int, ev.StepStatus]]:
        """Per-part progress snapshot in step order."""
        return [(part.id, status) for part, status in zip(self.db.parts, self.statuses)]


def new_session(
    db: PartsDb,
    params: GestureParams | None = None,
    range_radius: float = 1.5,
    arrival_radius: float = 0.3,
) -> Session:
    """Create a session in Idle with every step yet to start."""
    return Session(db, params=params, range_radius=range_radius, arrival_radius=arrival_radius)


def handle_command(session: Session, cmd: Command) -> Session:
    return session.handle_command(cmd)


def handle_position(session: Session, position: tuple[float, float]) -> Session:
    return session.handle_position(position)


def step_statuses(session: Session) -> list[tuple[int, ev.StepStatus]]:
    return session.step_statuses()
