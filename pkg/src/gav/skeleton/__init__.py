"""Skeleton data model, stream recording format, and synthetic trajectories."""

from .joints import (
    JOINT_ORDER,
    MIRROR_PAIRS,
    FrameStream,
    JointId,
    JointPosition,
    SkeletonFrame,
    default_rest_pose,
    validate_frame,
)
from .recording import (
    RecordingFormatError,
    format_number,
    parse_recording,
    serialize_recording,
)
from .synth import TrajectorySpec, Waypoint, load_trajectory_spec, synth_trajectory

__all__ = [
    "JOINT_ORDER",
    "MIRROR_PAIRS",
    "FrameStream",
    "JointId",
    "JointPosition",
    "SkeletonFrame",
    "default_rest_pose",
    "validate_frame",
    "RecordingFormatError",
    "format_number",
    "parse_recording",
    "serialize_recording",
    "TrajectorySpec",
    "Waypoint",
    "load_trajectory_spec",
    "synth_trajectory",
]
