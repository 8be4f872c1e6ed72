"""Line-protocol session service.

One TCP connection hosts one session: the client must open with a hello
carrying the protocol version, then may send speech text, raw frames,
injected gestures, and status queries. Messages are processed strictly
in arrival order; every accepted message yields at least one outbound
line (events, a statuses snapshot, an ack, or an error). The service
hosts any number of independent connections.
"""

from __future__ import annotations

import asyncio
import sys
from typing import TextIO

from ..gesture import Gesture, GestureParams
from ..partsdb import PartsDb, parse_parts_xml
from ..workflow import Session
from . import wire
from .driver import SessionDriver


class SessionConnection:
    """Protocol state for one client; transport-agnostic."""

    def __init__(
        self,
        db: PartsDb,
        params: GestureParams,
        range_radius: float,
        arrival_radius: float,
    ):
        self.session = Session(
            db, params=params, range_radius=range_radius, arrival_radius=arrival_radius
        )
        self.driver = SessionDriver(self.session)
        self._cursor = 0
        self._greeted = False

    def _drain_events(self) -> list[dict]:
        events = self.session.events
        out = []
        while self._cursor < len(events):
            out.append(wire.event_to_wire(events[self._cursor]))
            self._cursor += 1
        return out

    def handle_line(self, line: str) -> tuple[list[dict], bool]:
        """Process one inbound line -> (outbound messages, keep_open)."""
        try:
            message = wire.decode(line)
        except wire.WireError as exc:
            return [wire.error_message(str(exc))], True

        kind = message["kind"]
        if not self._greeted:
            if kind != "hello":
                return [wire.error_message("first message must be hello")], False
            version = message.get("version")
            if version != wire.PROTOCOL_VERSION:
                return [
                    wire.error_message(
                        f"protocol version mismatch: need {wire.PROTOCOL_VERSION}, got {version!r}"
                    )
                ], False
            self._greeted = True
            return [wire.ack_message()], True

        if kind == "hello":
            return [wire.error_message("hello already received")], True
        if kind == "status":
            return [wire.statuses_message(self.session)], True
        if kind == "speech":
            text = message.get("text")
            if not isinstance(text, str):
                return [wire.error_message("speech message needs string 'text'")], True
            if not self.driver.speech(text):
                return [wire.error_message(f"unrecognized speech {text!r}")], True
            return self._drain_events(), True
        if kind == "gesture":
            name = message.get("name")
            try:
                gesture = Gesture(name)
            except ValueError:
                return [wire.error_message(f"unknown gesture {name!r}")], True
            self.driver.gesture(gesture)
            return self._drain_events(), True
        if kind == "frame":
            try:
                frame = wire.frame_from_wire(message)
                self.driver.frame(frame)
            except (wire.WireError, ValueError) as exc:
                return [wire.error_message(str(exc))], True
            events = self._drain_events()
            return (events if events else [wire.ack_message()]), True
        return [wire.error_message(f"unknown message kind {kind!r}")], True


async def _serve_client(
    reader: asyncio.StreamReader,
    writer: asyncio.StreamWriter,
    db: PartsDb,
    params: GestureParams,
    range_radius: float,
    arrival_radius: float,
) -> None:
    connection = SessionConnection(db, params, range_radius, arrival_radius)
    try:
        while True:
            raw = await reader.readline()
            if not raw:
                break
            line = raw.decode("utf-8", errors="replace").rstrip("\r\n")
            if not line:
                continue
            outbound, keep_open = connection.handle_line(line)
            for message in outbound:
                writer.write(wire.encode(message).encode("utf-8"))
            await writer.drain()
            if not keep_open:
                break
    except (ConnectionResetError, BrokenPipeError):
        pass
    finally:
        writer.close()
        try:
            await writer.wait_closed()
        except (ConnectionResetError, BrokenPipeError):
            pass


async def serve(
    db: PartsDb,
    host: str,
    port: int,
    params: GestureParams | None = None,
    range_radius: float = 1.5,
    arrival_radius: float = 0.3,
) -> asyncio.AbstractServer:
    """Bind and return the server (callers control its lifetime)."""
    params = params if params is not None else GestureParams()

    async def client(reader, writer):
        await _serve_client(reader, writer, db, params, range_radius, arrival_radius)

    return await asyncio.start_server(client, host, port)


def run_serve(
    parts_path: str,
    listen: str,
    gesture_period: float = 1.0,
    fps: float = 30.0,
    range_radius: float = 1.5,
    arrival_radius: float = 0.3,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Run the service until interrupted. Prints LISTENING host:port when up."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        with open(parts_path, encoding="utf-8") as fh:
            db = parse_parts_xml(fh.read())
    except (OSError, ValueError) as exc:
        print(f"cannot load parts database: {exc}", file=err)
        return 1
    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"listen endpoint must be host:port, got {listen!r}", file=err)
        return 1
    params = GestureParams(gesture_period=gesture_period, fps=fps)

    async def main() -> None:
        server = await serve(
            db, host, int(port_text), params=params,
            range_radius=range_radius, arrival_radius=arrival_radius,
        )
        bound = server.sockets[0].getsockname()
        print(f"LISTENING {bound[0]}:{bound[1]}", file=out, flush=True)
        async with server:
            await server.serve_forever()

    try:
        asyncio.run(main())
    except KeyboardInterrupt:
        pass
    return 0
