"""Skeleton data model: 20 named body joints sampled as timestamped frames.

Coordinates are meters in a sensor-centric frame: x grows toward the
subject's left as seen by the sensor, y grows upward, z grows away from
the sensor (so any tracked joint has z > 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


class JointId(str, Enum):
    """The 20 tracked body joints, in canonical (wire) order."""

    HEAD = "Head"
    SHOULDER_CENTER = "ShoulderCenter"
    SHOULDER_LEFT = "ShoulderLeft"
    SHOULDER_RIGHT = "ShoulderRight"
    ELBOW_LEFT = "ElbowLeft"
    ELBOW_RIGHT = "ElbowRight"
    WRIST_LEFT = "WristLeft"
    WRIST_RIGHT = "WristRight"
    HAND_LEFT = "HandLeft"
    HAND_RIGHT = "HandRight"
    SPINE = "Spine"
    HIP_CENTER = "HipCenter"
    HIP_LEFT = "HipLeft"
    HIP_RIGHT = "HipRight"
    KNEE_LEFT = "KneeLeft"
    KNEE_RIGHT = "KneeRight"
    ANKLE_LEFT = "AnkleLeft"
    ANKLE_RIGHT = "AnkleRight"
    FOOT_LEFT = "FootLeft"
    FOOT_RIGHT = "FootRight"


JOINT_ORDER: tuple[JointId, ...] = tuple(JointId)

# Left/right counterparts, used when mirroring a pose about the x = 0 plane.
MIRROR_PAIRS: tuple[tuple[JointId, JointId], ...] = (
    (JointId.SHOULDER_LEFT, JointId.SHOULDER_RIGHT),
    (JointId.ELBOW_LEFT, JointId.ELBOW_RIGHT),
    (JointId.WRIST_LEFT, JointId.WRIST_RIGHT),
    (JointId.HAND_LEFT, JointId.HAND_RIGHT),
    (JointId.HIP_LEFT, JointId.HIP_RIGHT),
    (JointId.KNEE_LEFT, JointId.KNEE_RIGHT),
    (JointId.ANKLE_LEFT, JointId.ANKLE_RIGHT),
    (JointId.FOOT_LEFT, JointId.FOOT_RIGHT),
)


@dataclass(frozen=True)
class JointPosition:
    x: float
    y: float
    z: float
    tracked: bool = True


@dataclass(frozen=True)
class SkeletonFrame:
    """One timestamped sample of all 20 joint positions."""

    timestamp: float
    joints: dict[JointId, JointPosition]

    def translated(self, dx: float, dy: float, dz: float) -> "SkeletonFrame":
        """Rigidly translate every joint by (dx, dy, dz)."""
        moved = {
            jid: JointPosition(p.x + dx, p.y + dy, p.z + dz, p.tracked)
            for jid, p in self.joints.items()
        }
        return SkeletonFrame(self.timestamp, moved)

    def mirrored(self) -> "SkeletonFrame":
        """Reflect the pose about x = 0, swapping left/right joints."""
        swap = {}
        for left, right in MIRROR_PAIRS:
            swap[left] = right
            swap[right] = left
        joints = {}
        for jid, p in self.joints.items():
            joints[swap.get(jid, jid)] = JointPosition(-p.x, p.y, p.z, p.tracked)
        return SkeletonFrame(self.timestamp, joints)


@dataclass(frozen=True)
class FrameStream:
    """An ordered skeleton recording with its nominal capture rate."""

    nominal_fps: float
    frames: tuple[SkeletonFrame, ...] = field(default_factory=tuple)


def validate_frame(frame: SkeletonFrame) -> list[str]:
    """Check frame invariants; returns a list of violations (empty = valid).

    Checks: timestamp finite and non-negative, all 20 joints present,
    coordinates finite, and positive depth for tracked joints.
    """
    violations: list[str] = []
    if not math.isfinite(frame.timestamp):
        violations.append("non-finite timestamp")
    elif frame.timestamp < 0:
        violations.append(f"negative timestamp {frame.timestamp}")
    for jid in JOINT_ORDER:
        pos = frame.joints.get(jid)
        if pos is None:
            violations.append(f"missing joint {jid.value}")
            continue
        if not (math.isfinite(pos.x) and math.isfinite(pos.y) and math.isfinite(pos.z)):
            violations.append(f"non-finite coordinate in {jid.value}")
        elif pos.tracked and pos.z <= 0:
            violations.append(f"non-positive depth {pos.z} for tracked joint {jid.value}")
    return violations


# A plausible standing pose facing the sensor at ~2.5 m, used as the default
# rest pose for synthetic streams. Holding this pose fires no detector.
_REST_COORDS: dict[JointId, tuple[float, float, float]] = {
    JointId.HEAD: (0.0, 0.80, 2.5),
    JointId.SHOULDER_CENTER: (0.0, 0.50, 2.5),
    JointId.SHOULDER_LEFT: (-0.20, 0.45, 2.5),
    JointId.SHOULDER_RIGHT: (0.20, 0.45, 2.5),
    JointId.ELBOW_LEFT: (-0.30, 0.15, 2.5),
    JointId.ELBOW_RIGHT: (0.30, 0.15, 2.5),
    JointId.WRIST_LEFT: (-0.32, -0.08, 2.5),
    JointId.WRIST_RIGHT: (0.32, -0.08, 2.5),
    JointId.HAND_LEFT: (-0.33, -0.15, 2.5),
    JointId.HAND_RIGHT: (0.33, -0.15, 2.5),
    JointId.SPINE: (0.0, 0.20, 2.5),
    JointId.HIP_CENTER: (0.0, 0.0, 2.5),
    JointId.HIP_LEFT: (-0.12, -0.02, 2.5),
    JointId.HIP_RIGHT: (0.12, -0.02, 2.5),
    JointId.KNEE_LEFT: (-0.14, -0.45, 2.5),
    JointId.KNEE_RIGHT: (0.14, -0.45, 2.5),
    JointId.ANKLE_LEFT: (-0.15, -0.85, 2.5),
    JointId.ANKLE_RIGHT: (0.15, -0.85, 2.5),
    JointId.FOOT_LEFT: (-0.16, -0.95, 2.45),
    JointId.FOOT_RIGHT: (0.16, -0.95, 2.45),
}


def default_rest_pose() -> dict[JointId, JointPosition]:
    """A standing rest pose covering all 20 joints."""
    return {jid: JointPosition(x, y, z) for jid, (x, y, z) in _REST_COORDS.items()}
