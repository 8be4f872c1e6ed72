"""Line-oriented text format for skeleton stream recordings.

Layout (UTF-8, one record per line):

    SKSTREAM v1 fps=30
    t=0 Head:0,0.8,2.5,1 ShoulderCenter:0,0.5,2.5,1 ... FootRight:0.16,-0.95,2.45,1
    t=0.033333 ...

The header carries the nominal capture rate. Each frame line starts with
its timestamp and lists all 20 joints in canonical order as
``Name:x,y,z,tracked`` groups (tracked is 0 or 1). Numbers are decimal
with a ``.`` separator; canonical output keeps at most 6 fractional
digits and drops trailing zeros.
"""

from __future__ import annotations

import math

from .joints import JOINT_ORDER, FrameStream, JointPosition, SkeletonFrame

HEADER_PREFIX = "SKSTREAM v1 fps="


class RecordingFormatError(ValueError):
    """Raised when a recording document violates the stream format."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def format_number(value: float) -> str:
    """Canonical decimal rendering: up to 6 fractional digits, no trailing zeros."""
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    if text in ("", "-", "-0"):
        return "0"
    return text


def _parse_number(token: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise RecordingFormatError(line_no, f"non-numeric {what} {token!r}") from None
    if not math.isfinite(value):
        raise RecordingFormatError(line_no, f"non-finite {what} {token!r}")
    return value


def serialize_recording(stream: FrameStream) -> str:
    """Render a stream in canonical form; parse_recording inverts it."""
    lines = [f"{HEADER_PREFIX}{format_number(stream.nominal_fps)}"]
    for frame in stream.frames:
        groups = [f"t={format_number(frame.timestamp)}"]
        for jid in JOINT_ORDER:
            p = frame.joints[jid]
            groups.append(
                f"{jid.value}:{format_number(p.x)},{format_number(p.y)},"
                f"{format_number(p.z)},{1 if p.tracked else 0}"
            )
        lines.append(" ".join(groups))
    return "\n".join(lines) + "\n"


def parse_recording(text: str) -> FrameStream:
    """Parse a recording document.

    Raises RecordingFormatError (with the offending line number) on a
    malformed header, missing or out-of-order joints, non-numeric fields,
    or non-monotone timestamps.
    """
    lines = text.split("\n")
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise RecordingFormatError(1, f"malformed header, expected {HEADER_PREFIX!r}...")
    fps = _parse_number(lines[0][len(HEADER_PREFIX):], 1, "fps")
    if fps <= 0:
        raise RecordingFormatError(1, f"non-positive fps {fps}")

    frames: list[SkeletonFrame] = []
    last_ts: float | None = None
    for offset, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        tokens = line.split()
        if not tokens[0].startswith("t="):
            raise RecordingFormatError(offset, f"frame line must start with 't=', got {tokens[0]!r}")
        ts = _parse_number(tokens[0][2:], offset, "timestamp")
        if last_ts is not None and ts <= last_ts:
            raise RecordingFormatError(offset, f"non-monotone timestamp {ts} after {last_ts}")
        joint_tokens = tokens[1:]
        if len(joint_tokens) != len(JOINT_ORDER):
            raise RecordingFormatError(
                offset, f"expected {len(JOINT_ORDER)} joints, found {len(joint_tokens)}"
            )
        joints: dict = {}
        for jid, token in zip(JOINT_ORDER, joint_tokens):
            name, sep, coords = token.partition(":")
            if not sep or name != jid.value:
                raise RecordingFormatError(
                    offset, f"expected joint {jid.value}, found {name!r}"
                )
            parts = coords.split(",")
            if len(parts) != 4:
                raise RecordingFormatError(
                    offset, f"joint {name} needs x,y,z,tracked, got {coords!r}"
                )
            x = _parse_number(parts[0], offset, f"{name} x")
            y = _parse_number(parts[1], offset, f"{name} y")
            z = _parse_number(parts[2], offset, f"{name} z")
            if parts[3] not in ("0", "1"):
                raise RecordingFormatError(
                    offset, f"joint {name} tracked flag must be 0 or 1, got {parts[3]!r}"
                )
            joints[jid] = JointPosition(x, y, z, parts[3] == "1")
        frames.append(SkeletonFrame(ts, joints))
        last_ts = ts
    return FrameStream(nominal_fps=fps, frames=tuple(frames))
