"""Command-line entry points.

    gav replay <recording> --parts <xml> [--script <file>] [--realtime]
               [--gesture-period S] [--fps N] [--range-radius M]
    gav serve --parts <xml> --listen <host:port> [...]
    gav validate --parts <xml>
    gav synth <trajectory-spec.json> -o <recording>

Exit codes: 0 success (replay: session finished), 1 usage or parse
error, 2 replay session did not finish.
"""

from __future__ import annotations

import argparse
import sys

from ..partsdb import parse_parts_xml, validate_db
from ..skeleton import load_trajectory_spec, serialize_recording, synth_trajectory
from .replay import run_replay
from .server import run_serve


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gav", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    replay = sub.add_parser("replay", help="replay a recording through a session")
    replay.add_argument("recording")
    replay.add_argument("--parts", required=True, help="parts database XML")
    replay.add_argument("--script", help="timed command script (JSON)")
    replay.add_argument("--realtime", action="store_true", help="honor frame timestamps")
    replay.add_argument("--gesture-period", type=float, default=1.0, metavar="S")
    replay.add_argument("--fps", type=float, default=None, metavar="N",
                        help="override the recording's nominal fps")
    replay.add_argument("--range-radius", type=float, default=1.5, metavar="M")
    replay.add_argument("--arrival-radius", type=float, default=0.3, metavar="M")

    serve = sub.add_parser("serve", help="run the session service")
    serve.add_argument("--parts", required=True)
    serve.add_argument("--listen", required=True, metavar="HOST:PORT")
    serve.add_argument("--gesture-period", type=float, default=1.0, metavar="S")
    serve.add_argument("--fps", type=float, default=30.0, metavar="N")
    serve.add_argument("--range-radius", type=float, default=1.5, metavar="M")
    serve.add_argument("--arrival-radius", type=float, default=0.3, metavar="M")

    validate = sub.add_parser("validate", help="validate a parts database")
    validate.add_argument("--parts", required=True)

    synth = sub.add_parser("synth", help="generate a recording from a trajectory spec")
    synth.add_argument("spec", help="trajectory spec JSON")
    synth.add_argument("-o", "--output", required=True, help="recording file to write")

    return parser


def _cmd_validate(parts_path: str) -> int:
    try:
        with open(parts_path, encoding="utf-8") as fh:
            db = parse_parts_xml(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for warning in db.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    violations = validate_db(db)
    if violations:
        for violation in violations:
            print(f"violation: {violation}")
        return 1
    print(f"ok: {len(db.parts)} part(s)")
    return 0


def _cmd_synth(spec_path: str, output_path: str) -> int:
    try:
        with open(spec_path, encoding="utf-8") as fh:
            spec = load_trajectory_spec(fh.read())
        stream = synth_trajectory(spec)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(serialize_recording(stream))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(stream.frames)} frame(s) to {output_path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "replay":
        return run_replay(
            args.recording,
            args.parts,
            script_path=args.script,
            realtime=args.realtime,
            gesture_period=args.gesture_period,
            fps=args.fps,
            range_radius=args.range_radius,
            arrival_radius=args.arrival_radius,
        )
    if args.command == "serve":
        return run_serve(
            args.parts,
            args.listen,
            gesture_period=args.gesture_period,
            fps=args.fps,
            range_radius=args.range_radius,
            arrival_radius=args.arrival_radius,
        )
    if args.command == "validate":
        return _cmd_validate(args.parts)
    if args.command == "synth":
        return _cmd_synth(args.spec, args.output)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
