"""Synthetic skeleton streams from piecewise-linear joint trajectories.

Stands in for a live sensor: a trajectory spec gives a rest pose plus
per-joint waypoints, and the generator emits evenly timed frames with the
listed joints interpolated and everything else held at rest.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field

from .joints import (
    JOINT_ORDER,
    FrameStream,
    JointId,
    JointPosition,
    SkeletonFrame,
    default_rest_pose,
)


@dataclass(frozen=True)
class Waypoint:
    time: float
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class TrajectorySpec:
    """Duration, rate, rest pose, and per-joint waypoint tracks."""

    duration: float
    fps: float
    rest: dict[JointId, JointPosition] = field(default_factory=default_rest_pose)
    waypoints: dict[JointId, tuple[Waypoint, ...]] = field(default_factory=dict)


def load_trajectory_spec(text: str) -> TrajectorySpec:
    """Parse the JSON trajectory format.

    Schema: {"duration": s, "fps": n, "rest": {joint: [x, y, z], ...}?,
    "waypoints": {joint: [[t, x, y, z], ...], ...}?}. An omitted rest
    section uses the default standing pose; a partial one overrides it
    joint by joint.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("trajectory spec must be a JSON object")
    try:
        duration = float(data["duration"])
        fps = float(data["fps"])
    except KeyError as exc:
        raise ValueError(f"trajectory spec missing {exc.args[0]!r}") from None
    rest = default_rest_pose()
    for name, coords in (data.get("rest") or {}).items():
        rest[JointId(name)] = JointPosition(*map(float, coords))
    waypoints: dict[JointId, tuple[Waypoint, ...]] = {}
    for name, points in (data.get("waypoints") or {}).items():
        waypoints[JointId(name)] = tuple(
            Waypoint(float(t), float(x), float(y), float(z)) for t, x, y, z in points
        )
    return TrajectorySpec(duration=duration, fps=fps, rest=rest, waypoints=waypoints)


def _sample_track(track: tuple[Waypoint, ...], times: list[float], t: float) -> tuple[float, float, float]:
    """Piecewise-linear sample at t, clamped to the first/last waypoint."""
    i = bisect_right(times, t)
    if i == 0:
        w = track[0]
        return (w.x, w.y, w.z)
    if i == len(track):
        w = track[-1]
        return (w.x, w.y, w.z)
    a, b = track[i - 1], track[i]
    span = b.time - a.time
    if span <= 0:
        return (b.x, b.y, b.z)
    u = (t - a.time) / span
    return (a.x + u * (b.x - a.x), a.y + u * (b.y - a.y), a.z + u * (b.z - a.z))


def synth_trajectory(spec: TrajectorySpec) -> FrameStream:
    """Generate round(duration * fps) frames at timestamps k / fps.

    Raises ValueError for non-positive duration or fps, a rest pose not
    covering all 20 joints, unsorted waypoint times, or waypoint times
    outside [0, duration].
    """
    if spec.duration <= 0:
        raise ValueError(f"duration must be positive, got {spec.duration}")
    if spec.fps <= 0:
        raise ValueError(f"fps must be positive, got {spec.fps}")
    missing = [jid.value for jid in JOINT_ORDER if jid not in spec.rest]
    if missing:
        raise ValueError(f"rest pose missing joints: {', '.join(missing)}")
    tracks: dict[JointId, tuple[tuple[Waypoint, ...], list[float]]] = {}
    for jid, track in spec.waypoints.items():
        if not track:
            continue
        times = [w.time for w in track]
        if any(b < a for a, b in zip(times, times[1:])):
            raise ValueError(f"waypoint times for {jid.value} must be non-decreasing")
        if times[0] < 0 or times[-1] > spec.duration:
            raise ValueError(
                f"waypoint time outside [0, {spec.duration}] for {jid.value}"
            )
        tracks[jid] = (track, times)

    n_frames = int(round(spec.duration * spec.fps))
    frames = []
    for k in range(n_frames):
        t = k / spec.fps
        joints = dict(spec.rest)
        for jid, (track, times) in tracks.items():
            x, y, z = _sample_track(track, times, t)
            joints[jid] = JointPosition(x, y, z)
        frames.append(SkeletonFrame(t, joints))
    return FrameStream(nominal_fps=spec.fps, frames=tuple(frames))
