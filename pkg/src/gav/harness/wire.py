"""Newline-delimited JSON wire protocol ("gav1").

One JSON object per line over a persistent byte stream. Inbound kinds:
hello {version}, speech {text}, frame {t, joints}, gesture {name},
status {}. Outbound kinds: event {name, ...}, statuses {list, state},
error {message}, ack {}. The first inbound message must be a hello with
the matching protocol version.
"""

from __future__ import annotations

import json
from typing import Any

from .. import events as ev
from ..skeleton import JOINT_ORDER, JointId, JointPosition, SkeletonFrame
from ..workflow import Guiding, Session, SessionState, StepActive, state_name

PROTOCOL_VERSION = "gav1"


class WireError(ValueError):
    """Raised for inbound messages that cannot be decoded."""


def encode(message: dict[str, Any]) -> str:
    """One canonical JSON line (stable key order, no stray whitespace)."""
    return json.dumps(message, sort_keys=True, separators=(",", ":")) + "\n"


def decode(line: str) -> dict[str, Any]:
    try:
        message = json.loads(line)
    except json.JSONDecodeError as exc:
        raise WireError(f"invalid JSON: {exc}") from None
    if not isinstance(message, dict):
        raise WireError("message must be a JSON object")
    kind = message.get("kind")
    if not isinstance(kind, str):
        raise WireError("message missing string 'kind'")
    return message


def event_to_wire(event: ev.Event) -> dict[str, Any]:
    """Map an event to its outbound message (one kind per event type)."""
    payload: dict[str, Any] = {"kind": "event", "name": type(event).__name__}
    if isinstance(event, ev.InstructionDisplayed):
        payload.update(step=event.step, image=event.image, text=event.text)
    elif isinstance(event, ev.VideoPlay):
        payload.update(path=event.path)
    elif isinstance(event, ev.InstructionRepeated):
        payload.update(step=event.step)
    elif isinstance(event, ev.Alarm):
        payload.update(distance=event.distance)
    elif isinstance(event, ev.StatusChanged):
        payload.update(step=event.step, status=event.status.value)
    elif isinstance(event, ev.TargetReached):
        payload.update(step=event.step, target=event.target)
    elif isinstance(event, ev.InvalidCommand):
        payload.update(reason=event.reason)
    return payload


def state_to_wire(state: SessionState) -> dict[str, Any]:
    info: dict[str, Any] = {"state": state_name(state)}
    if isinstance(state, Guiding):
        info.update(step=state.step, phase=state.phase.value)
    elif isinstance(state, StepActive):
        info.update(step=state.step)
    return info


def statuses_message(session: Session) -> dict[str, Any]:
    return {
        "kind": "statuses",
        "list": [
            {"id": part_id, "status": status.value}
            for part_id, status in session.step_statuses()
        ],
        **state_to_wire(session.state),
    }


def error_message(message: str) -> dict[str, Any]:
    return {"kind": "error", "message": message}


def ack_message() -> dict[str, Any]:
    return {"kind": "ack"}


def frame_from_wire(message: dict[str, Any]) -> SkeletonFrame:
    """Decode a frame message into a SkeletonFrame."""
    try:
        t = float(message["t"])
        joints_raw = message["joints"]
    except (KeyError, TypeError, ValueError) as exc:
        raise WireError(f"frame message malformed: {exc}") from None
    if not isinstance(joints_raw, dict):
        raise WireError("frame joints must be an object")
    joints: dict[JointId, JointPosition] = {}
    for jid in JOINT_ORDER:
        entry = joints_raw.get(jid.value)
        if entry is None:
            raise WireError(f"frame missing joint {jid.value}")
        try:
            x, y, z, tracked = entry
            joints[jid] = JointPosition(float(x), float(y), float(z), bool(tracked))
        except (TypeError, ValueError) as exc:
            raise WireError(f"joint {jid.value} malformed: {exc}") from None
    return SkeletonFrame(timestamp=t, joints=joints)


def frame_to_wire(frame: SkeletonFrame) -> dict[str, Any]:
    joints = {}
    for jid in JOINT_ORDER:
        p = frame.joints[jid]
        joints[jid.value] = [p.x, p.y, p.z, 1 if p.tracked else 0]
    return {"kind": "frame", "t": frame.timestamp, "joints": joints}
