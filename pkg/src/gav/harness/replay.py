"""Replays a recorded skeleton stream through a session.

Recordings carry only skeleton data, so commands that the operator would
speak (start, mode/assembly/part selection, ...) come from a script file:
a JSON array of {"t": seconds, "speech": phrase} or {"t": seconds,
"gesture": name} entries. Entries fire once the replay clock reaches
their time, before the frame that crosses it. Every session event is
printed as one wire-format line; replay of the same inputs is
byte-identical.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass
from typing import TextIO

from ..commands import Command, parse_speech_token
from ..gesture import Gesture, GestureParams
from ..partsdb import parse_parts_xml
from ..skeleton import parse_recording
from ..workflow import Finished, Session
from . import wire
from .driver import SessionDriver

EXIT_FINISHED = 0
EXIT_USAGE = 1
EXIT_UNFINISHED = 2


@dataclass(frozen=True)
class ScriptEntry:
    t: float
    command: Command | None = None
    gesture: Gesture | None = None


def load_script(text: str) -> list[ScriptEntry]:
    """Parse and validate a script document; raises ValueError."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("script must be a JSON array")
    entries: list[ScriptEntry] = []
    for i, raw in enumerate(data):
        if not isinstance(raw, dict) or "t" not in raw:
            raise ValueError(f"script entry {i} must be an object with 't'")
        t = float(raw["t"])
        if "speech" in raw:
            command = parse_speech_token(str(raw["speech"]))
            if command is None:
                raise ValueError(f"script entry {i}: unrecognized phrase {raw['speech']!r}")
            entries.append(ScriptEntry(t=t, command=command))
        elif "gesture" in raw:
            try:
                gesture = Gesture(str(raw["gesture"]))
            except ValueError:
                raise ValueError(f"script entry {i}: unknown gesture {raw['gesture']!r}") from None
            entries.append(ScriptEntry(t=t, gesture=gesture))
        else:
            raise ValueError(f"script entry {i} needs 'speech' or 'gesture'")
    entries.sort(key=lambda e: e.t)
    return entries


class _EventPrinter:
    def __init__(self, session: Session, out: TextIO):
        self.session = session
        self.out = out
        self.cursor = 0

    def flush(self) -> None:
        events = self.session.events
        while self.cursor < len(events):
            self.out.write(wire.encode(wire.event_to_wire(events[self.cursor])))
            self.cursor += 1


def run_replay(
    recording_path: str,
    parts_path: str,
    script_path: str | None = None,
    realtime: bool = False,
    gesture_period: float = 1.0,
    fps: float | None = None,
    range_radius: float = 1.5,
    arrival_radius: float = 0.3,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Drive a session from a recording; exit status 0 iff it finished."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    try:
        with open(recording_path, encoding="utf-8") as fh:
            stream = parse_recording(fh.read())
    except OSError as exc:
        print(f"cannot open recording: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"recording error: {exc}", file=err)
        return EXIT_USAGE

    try:
        with open(parts_path, encoding="utf-8") as fh:
            db = parse_parts_xml(fh.read())
    except OSError as exc:
        print(f"cannot open parts database: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"parts database error: {exc}", file=err)
        return EXIT_USAGE

    script: list[ScriptEntry] = []
    if script_path is not None:
        try:
            with open(script_path, encoding="utf-8") as fh:
                script = load_script(fh.read())
        except OSError as exc:
            print(f"cannot open script: {exc}", file=err)
            return EXIT_USAGE
        except ValueError as exc:
            print(f"script error: {exc}", file=err)
            return EXIT_USAGE

    params = GestureParams(
        gesture_period=gesture_period,
        fps=fps if fps is not None else stream.nominal_fps,
    )
    try:
        session = Session(db, params=params, range_radius=range_radius,
                          arrival_radius=arrival_radius)
    except ValueError as exc:
        print(f"session error: {exc}", file=err)
        return EXIT_USAGE

    driver = SessionDriver(session)
    printer = _EventPrinter(session, out)

    def apply_entry(entry: ScriptEntry) -> None:
        if entry.command is not None:
            driver.command(entry.command, source="speech")
        elif entry.gesture is not None:
            driver.gesture(entry.gesture)

    next_entry = 0
    prev_ts: float | None = None
    for frame in stream.frames:
        while next_entry < len(script) and script[next_entry].t <= frame.timestamp:
            apply_entry(script[next_entry])
            next_entry += 1
        if realtime and prev_ts is not None:
            time.sleep(max(0.0, frame.timestamp - prev_ts))
        prev_ts = frame.timestamp
        driver.frame(frame)
        printer.flush()
    while next_entry < len(script):
        apply_entry(script[next_entry])
        next_entry += 1
    printer.flush()

    return EXIT_FINISHED if isinstance(session.state, Finished) else EXIT_UNFINISHED
