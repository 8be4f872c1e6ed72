"""Shared builders for synthetic poses, histories, and sample databases."""

from __future__ import annotations

import json
import random

from gav.gesture import FrameHistory
from gav.skeleton import (
    JointId,
    JointPosition,
    SkeletonFrame,
    TrajectorySpec,
    Waypoint,
    default_rest_pose,
    synth_trajectory,
)

RIGHT_WHEEL_XML = """<Parts>
  <Part>
    <id>1</id>
    <Part_name>Right Wheel</Part_name>
    <Lift>
      <X>-1.0</X>
      <Z>3.7</Z>
    </Lift>
    <Put>
      <X>0.4</X>
      <Z>2.0</Z>
    </Put>
    <Image1>RightWheelLift.jpg</Image1>
    <Image2>RightWheelPut.jpg</Image2>
    <Commands_Lift>Lift Wheel</Commands_Lift>
    <Commands_Put>Fix Wheel</Commands_Put>
    <videoPath>right_wheel_video.avi</videoPath>
  </Part>
</Parts>
"""


def three_part_xml() -> str:
    parts = []
    for pid, name in ((1, "Right Wheel"), (2, "Left Wheel"), (3, "Axle")):
        parts.append(
            f"""  <Part>
    <id>{pid}</id>
    <Part_name>{name}</Part_name>
    <Lift><X>{-1.0 + pid * 0.1}</X><Z>3.7</Z></Lift>
    <Put><X>{0.4 + pid * 0.1}</X><Z>2.0</Z></Put>
    <Image1>{name.replace(' ', '')}Lift.jpg</Image1>
    <Image2>{name.replace(' ', '')}Put.jpg</Image2>
    <Commands_Lift>Lift {name}</Commands_Lift>
    <Commands_Put>Fix {name}</Commands_Put>
    <videoPath>{name.replace(' ', '_').lower()}.avi</videoPath>
  </Part>"""
        )
    return "<Parts>\n" + "\n".join(parts) + "\n</Parts>\n"


def make_frame(t: float, **overrides: tuple[float, float, float]) -> SkeletonFrame:
    """A rest-pose frame at time t with per-joint (x, y, z) overrides by name."""
    joints = default_rest_pose()
    for name, coords in overrides.items():
        joints[JointId(name)] = JointPosition(*coords)
    return SkeletonFrame(t, joints)


def make_history(frames, capacity: int | None = None) -> FrameHistory:
    frames = list(frames)
    history = FrameHistory(capacity=capacity or max(1, len(frames)))
    for frame in frames:
        history.push(frame)
    return history


def hold_stream(seconds: float, fps: float = 30.0, **overrides) -> list[SkeletonFrame]:
    """Identical frames holding a pose for the given duration."""
    n = int(round(seconds * fps))
    return [make_frame(k / fps, **overrides) for k in range(n)]


# Canonical lateral sweep: hand travels chest-high from x=0.05 to x=0.50
# over the second half of a 2 s stream, wrist trailing 2 cm behind and the
# elbow 25 cm behind and above the hand. The torso matches the default
# rest pose (shoulder-center rise over spine = 0.3 m), so the travel
# threshold is start + 0.3.
def canonical_sweep_spec(fps: float = 30.0) -> TrajectorySpec:
    rest = default_rest_pose()
    rest[JointId.HAND_RIGHT] = JointPosition(0.05, 0.55, 2.4)
    rest[JointId.WRIST_RIGHT] = JointPosition(0.03, 0.53, 2.4)
    rest[JointId.ELBOW_RIGHT] = JointPosition(-0.20, 0.65, 2.45)
    waypoints = {
        JointId.HAND_RIGHT: (
            Waypoint(0.0, 0.05, 0.55, 2.4),
            Waypoint(1.0, 0.05, 0.55, 2.4),
            Waypoint(2.0, 0.50, 0.55, 2.4),
        ),
        JointId.WRIST_RIGHT: (
            Waypoint(0.0, 0.03, 0.53, 2.4),
            Waypoint(1.0, 0.03, 0.53, 2.4),
            Waypoint(2.0, 0.48, 0.53, 2.4),
        ),
        JointId.ELBOW_RIGHT: (
            Waypoint(0.0, -0.20, 0.65, 2.45),
            Waypoint(1.0, -0.20, 0.65, 2.45),
            Waypoint(2.0, 0.25, 0.65, 2.45),
        ),
    }
    return TrajectorySpec(duration=2.0, fps=fps, rest=rest, waypoints=waypoints)


def canonical_sweep_frames(fps: float = 30.0) -> list[SkeletonFrame]:
    return list(synth_trajectory(canonical_sweep_spec(fps)).frames)


def random_walk_frames(rng: random.Random, length: int) -> list[SkeletonFrame]:
    """Right arm random-walking around a fixed torso; adversarial for sweeps."""
    hx, hy, hz = 0.1, 0.55, 2.4
    frames = []
    for k in range(length):
        hx += rng.uniform(-0.08, 0.10)
        hy += rng.uniform(-0.10, 0.10)
        hz += rng.uniform(-0.05, 0.05)
        frames.append(
            make_frame(
                k / 30.0,
                HandRight=(hx, hy, hz),
                WristRight=(hx + rng.uniform(-0.05, 0.05), hy - 0.02, hz),
                ElbowRight=(hx + rng.uniform(-0.3, 0.3), hy + rng.uniform(-0.3, 0.3), hz + 0.05),
            )
        )
    return frames


# Full walkthrough used by the replay tests: walk to the lift point, then
# the put point, then sweep the right hand to advance past the only step.
E2E_TRAJECTORY_JSON = json.dumps(
    {
        "duration": 8.0,
        "fps": 30,
        "waypoints": {
            "HipCenter": [
                [0.0, 0.0, 0.0, 2.5],
                [0.5, 0.0, 0.0, 2.5],
                [2.3, -1.0, 0.0, 3.7],
                [2.7, -1.0, 0.0, 3.7],
                [4.5, 0.4, 0.0, 2.0],
                [8.0, 0.4, 0.0, 2.0],
            ],
            "HandRight": [
                [0.0, 0.05, 0.55, 2.4],
                [5.2, 0.05, 0.55, 2.4],
                [6.2, 0.50, 0.55, 2.4],
                [8.0, 0.50, 0.55, 2.4],
            ],
            "WristRight": [
                [0.0, 0.03, 0.53, 2.4],
                [5.2, 0.03, 0.53, 2.4],
                [6.2, 0.48, 0.53, 2.4],
                [8.0, 0.48, 0.53, 2.4],
            ],
            "ElbowRight": [
                [0.0, -0.20, 0.65, 2.45],
                [5.2, -0.20, 0.65, 2.45],
                [6.2, 0.25, 0.65, 2.45],
                [8.0, 0.25, 0.65, 2.45],
            ],
        },
    },
    indent=2,
)

E2E_SCRIPT_JSON = json.dumps(
    [
        {"t": 0.1, "speech": "start"},
        {"t": 0.2, "speech": "gesture mode"},
        {"t": 0.3, "speech": "full assembly"},
    ],
    indent=2,
)
