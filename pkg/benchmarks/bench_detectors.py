"""Benchmark: compiled gesture kernels vs the pure-Python fallback.

Times each kernel on identical packed windows, then the full per-frame
detection pipeline (pack + arbitrate) on a synthetic stream.

    python benchmarks/bench_detectors.py [--frames 20000] [--window 30]
"""

from __future__ import annotations

import argparse
import random
import time

from gav.gesture import FrameHistory, GestureParams, detect_all
from gav.gesture import _kernels_py
from gav.gesture.packing import pack_frames
from gav.skeleton import JointId, JointPosition, SkeletonFrame, default_rest_pose

try:
    from gav.gesture import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

KERNELS = [
    ("right_sweep", ()),
    ("left_sweep", ()),
    ("hands_up", (0.10,)),
    ("hands_up_folded", (0.10,)),
    ("hands_forward", (0.35,)),
    ("zoom_in", (0.02,)),
    ("zoom_out", (0.02,)),
]


def wandering_frames(count: int) -> list[SkeletonFrame]:
    """Slow hand wander that passes the rejection gates but never fires,
    forcing every kernel through its whole window (the worst case)."""
    rng = random.Random(1234)
    rest = default_rest_pose()
    frames = []
    hx, hy = 0.2, 0.55
    for k in range(count):
        hx = min(0.4, max(0.05, hx + rng.uniform(-0.01, 0.01)))
        hy = min(0.75, max(0.52, hy + rng.uniform(-0.01, 0.01)))
        joints = dict(rest)
        joints[JointId.HAND_RIGHT] = JointPosition(hx, hy, 2.4)
        joints[JointId.WRIST_RIGHT] = JointPosition(hx - 0.03, hy - 0.02, 2.4)
        joints[JointId.ELBOW_RIGHT] = JointPosition(hx - 0.25, hy + 0.1, 2.45)
        joints[JointId.HAND_LEFT] = JointPosition(-hx, hy, 2.4)
        joints[JointId.WRIST_LEFT] = JointPosition(-hx + 0.03, hy - 0.02, 2.4)
        joints[JointId.ELBOW_LEFT] = JointPosition(-hx + 0.25, hy + 0.1, 2.45)
        frames.append(SkeletonFrame(k / 30.0, joints))
    return frames


def bench_kernels(window, repeats: int) -> None:
    print(f"{'kernel':<18}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, args in KERNELS:
        py_kernel = getattr(_kernels_py, name)
        t0 = time.perf_counter()
        for _ in range(repeats):
            py_kernel(window, *args)
        py_rate = repeats / (time.perf_counter() - t0)
        if _kernels_c is None:
            print(f"{name:<18}{py_rate:>10.0f}/s{'-':>12}{'-':>10}")
            continue
        c_kernel = getattr(_kernels_c, name)
        t0 = time.perf_counter()
        for _ in range(repeats):
            c_kernel(window, *args)
        c_rate = repeats / (time.perf_counter() - t0)
        print(f"{name:<18}{py_rate:>10.0f}/s{c_rate:>10.0f}/s{c_rate / py_rate:>9.1f}x")


def bench_pipeline(frames: list[SkeletonFrame], params: GestureParams) -> float:
    history = FrameHistory.for_params(params)
    t0 = time.perf_counter()
    for frame in frames:
        history.push(frame)
        detect_all(history, params)
    return len(frames) / (time.perf_counter() - t0)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--frames", type=int, default=20_000)
    parser.add_argument("--window", type=int, default=30)
    parser.add_argument("--repeats", type=int, default=20_000)
    args = parser.parse_args()

    from gav.gesture import KERNEL_BACKEND

    print(f"active backend: {KERNEL_BACKEND}")
    if _kernels_c is None:
        print("compiled kernels not built; showing pure-Python rates only")

    frames = wandering_frames(max(args.frames, args.window + 1))
    window = pack_frames(frames[: args.window])
    print(f"\nper-kernel scan rate on a {args.window}-frame window:")
    bench_kernels(window, args.repeats)

    params = GestureParams(gesture_period=args.window / 30.0, fps=30.0)
    rate = bench_pipeline(frames, params)
    print(
        f"\nfull pipeline ({KERNEL_BACKEND} backend): "
        f"{rate:,.0f} frames/s over {len(frames):,} frames "
        f"({rate / 30.0:,.0f}x realtime at 30 fps)"
    )
    print("set GAV_KERNEL_BACKEND=python|compiled to pin the pipeline backend")


if __name__ == "__main__":
    main()
