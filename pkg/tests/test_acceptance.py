"""Acceptance suite: one test (and one printed PASS/FAIL line) per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines on a passing run; pytest shows captured output for failures anyway.
"""

from __future__ import annotations

import io
import json
import math
import random
import string
import time

import numpy as np

from gav import events as ev
from gav.commands import (
    AssemblyMode,
    CommandKind,
    MORE_DETAILS,
    NEXT_INSTRUCTION,
    PAUSE,
    PREVIOUS_INSTRUCTION,
    REPEAT_INSTRUCTION,
    RESUME,
    SELECT_FULL_ASSEMBLY,
    SELECT_GESTURE_MODE,
    SELECT_PART_ASSEMBLY,
    SELECT_SPEECH_MODE,
    START,
    STOP,
    gesture_to_command,
    parse_speech_token,
    select_part,
)
from gav.gesture import (
    FrameHistory,
    Gesture,
    GestureParams,
    detect_left_sweep,
    detect_right_sweep,
)
from gav.harness.replay import EXIT_FINISHED, run_replay
from gav.partsdb import Part, PartsDb, parse_parts_xml
from gav.skeleton import (
    SkeletonFrame,
    load_trajectory_spec,
    serialize_recording,
    synth_trajectory,
)
from gav.workflow import (
    AwaitingAssemblyMode,
    AwaitingControlMode,
    AwaitingPartSelection,
    Finished,
    GuidePhase,
    Guiding,
    Idle,
    Paused,
    Session,
    Signal,
    StepActive,
    new_session,
    verify_tool,
)

from conftest import (
    E2E_SCRIPT_JSON,
    E2E_TRAJECTORY_JSON,
    RIGHT_WHEEL_XML,
    canonical_sweep_frames,
    hold_stream,
    make_history,
    random_walk_frames,
    three_part_xml,
)
from sweep_reference import right_sweep_reference

PARAMS = GestureParams(gesture_period=1.0, fps=30.0)


def report(criterion: int, description: str, passed: bool) -> None:
    verdict = "PASS" if passed else "FAIL"
    print(f"[criterion {criterion}] {verdict} — {description}", flush=True)


def thousand_histories() -> list[list[SkeletonFrame]]:
    rng = random.Random(0xACCE97)
    return [random_walk_frames(rng, rng.randint(25, 45)) for _ in range(1000)]


class TestCriterion1OracleEquivalence:
    def test_reference_agreement_on_1000_histories(self):
        start = time.monotonic()
        disagreements = 0
        for frames in thousand_histories():
            expected = right_sweep_reference(1.0, 30.0, frames)
            actual = detect_right_sweep(make_history(frames, capacity=64), PARAMS)
            if expected != actual:
                disagreements += 1
        elapsed = time.monotonic() - start
        passed = disagreements == 0 and elapsed < 5.0
        report(
            1,
            f"right-sweep engine vs straight-line reference: "
            f"{disagreements} disagreements in 1000 histories, {elapsed:.2f}s",
            passed,
        )
        assert disagreements == 0
        assert elapsed < 5.0


class TestCriterion2SweepPositiveNegative:
    def test_canonical_positive_and_negatives(self):
        frames = canonical_sweep_frames()
        history = FrameHistory(capacity=2 * PARAMS.window_len)
        fired = []
        for frame in frames:
            history.push(frame)
            if detect_right_sweep(history, PARAMS):
                fired.append(frame.timestamp)

        reversed_frames = [
            SkeletonFrame(orig.timestamp, moved.joints)
            for orig, moved in zip(frames, reversed(frames))
        ]
        rev_history = FrameHistory(capacity=2 * PARAMS.window_len)
        rev_fired = []
        for frame in reversed_frames:
            rev_history.push(frame)
            if detect_right_sweep(rev_history, PARAMS):
                rev_fired.append(frame.timestamp)

        rest_history = FrameHistory(capacity=2 * PARAMS.window_len)
        rest_fired = []
        for frame in hold_stream(3.0):
            rest_history.push(frame)
            if detect_right_sweep(rest_history, PARAMS):
                rest_fired.append(frame.timestamp)

        passed = bool(fired) and not rev_fired and not rest_fired
        report(
            2,
            f"canonical sweep fires (first at t={fired[0]:.3f}s), "
            f"time-reversed and rest-pose streams do not",
            passed,
        )
        assert fired
        assert not rev_fired
        assert not rest_fired


class TestCriterion3MirrorLaw:
    def test_left_equals_mirrored_right_on_1000_histories(self):
        mismatches = 0
        for frames in thousand_histories():
            history = make_history(frames, capacity=64)
            mirrored = make_history([f.mirrored() for f in frames], capacity=64)
            if detect_left_sweep(history, PARAMS) != detect_right_sweep(mirrored, PARAMS):
                mismatches += 1
            if detect_right_sweep(history, PARAMS) != detect_left_sweep(mirrored, PARAMS):
                mismatches += 1
        report(3, f"mirror law: {mismatches} mismatches over 1000 histories", mismatches == 0)
        assert mismatches == 0


class TestCriterion4CommandMapping:
    def test_table_phrases_and_rejections(self):
        expected_table = {
            (Gesture.HANDS_UP, AssemblyMode.FULL): CommandKind.PAUSE,
            (Gesture.HANDS_UP, AssemblyMode.PART): CommandKind.PAUSE,
            (Gesture.RIGHT_SWEEP, AssemblyMode.FULL): CommandKind.NEXT_INSTRUCTION,
            (Gesture.RIGHT_SWEEP, AssemblyMode.PART): None,
            (Gesture.ZOOM_IN, AssemblyMode.FULL): CommandKind.MORE_DETAILS,
            (Gesture.ZOOM_IN, AssemblyMode.PART): CommandKind.MORE_DETAILS,
            (Gesture.ZOOM_OUT, AssemblyMode.FULL): CommandKind.REPEAT_INSTRUCTION,
            (Gesture.ZOOM_OUT, AssemblyMode.PART): CommandKind.REPEAT_INSTRUCTION,
            (Gesture.LEFT_SWEEP, AssemblyMode.FULL): CommandKind.PREVIOUS_INSTRUCTION,
            (Gesture.LEFT_SWEEP, AssemblyMode.PART): None,
            (Gesture.HANDS_FORWARD, AssemblyMode.FULL): CommandKind.RESUME,
            (Gesture.HANDS_FORWARD, AssemblyMode.PART): CommandKind.RESUME,
            (Gesture.HANDS_UP_FOLDED, AssemblyMode.FULL): CommandKind.STOP,
            (Gesture.HANDS_UP_FOLDED, AssemblyMode.PART): CommandKind.STOP,
        }
        table_ok = all(
            (lambda c: c.kind if c else None)(gesture_to_command(g, m)) == want
            for (g, m), want in expected_table.items()
        )

        phrase_expectations = {
            "start": CommandKind.START,
            "pause": CommandKind.PAUSE,
            "next instruction": CommandKind.NEXT_INSTRUCTION,
            "more details": CommandKind.MORE_DETAILS,
            "repeat instruction": CommandKind.REPEAT_INSTRUCTION,
            "previous instruction": CommandKind.PREVIOUS_INSTRUCTION,
            "resume": CommandKind.RESUME,
            "stop": CommandKind.STOP,
            "next command": CommandKind.NEXT_INSTRUCTION,
        }
        phrases_ok = all(
            (parsed := parse_speech_token(phrase)) is not None and parsed.kind is kind
            for phrase, kind in phrase_expectations.items()
        )

        rng = random.Random(0xF00D)
        non_phrases = [
            "".join(rng.choices(string.ascii_lowercase + " ", k=rng.randint(3, 18)))
            for _ in range(20)
        ]
        non_phrases_ok = all(parse_speech_token(text) is None for text in non_phrases)

        passed = table_ok and phrases_ok and non_phrases_ok
        report(
            4,
            "gesture table (7x2) exact, all 9 phrases parse, 20 non-phrases rejected",
            passed,
        )
        assert table_ok and phrases_ok and non_phrases_ok


class TestCriterion5GoldenParse:
    def test_right_wheel_document(self):
        db = parse_parts_xml(RIGHT_WHEEL_XML)
        part = db.parts[0]
        expected = Part(
            id=1,
            part_name="Right Wheel",
            lift=(-1.0, 3.7),
            put=(0.4, 2.0),
            image1="RightWheelLift.jpg",
            image2="RightWheelPut.jpg",
            commands_lift="Lift Wheel",
            commands_put="Fix Wheel",
            video_path="right_wheel_video.avi",
        )
        passed = len(db.parts) == 1 and part == expected
        report(5, "golden single-part XML parses to exact field values", passed)
        assert part == expected


def walk_to_step(session: Session) -> None:
    assert isinstance(session.state, Guiding)
    part = session.db.parts[session.state.step]
    session.handle_position(part.lift)
    session.handle_position(part.put)


def assert_prefix_law(session: Session) -> None:
    values = [s.value for s in session.statuses]
    k = 0
    while k < len(values) and values[k] == "Completed":
        k += 1
    current = 0
    while k < len(values) and values[k] == "Current":
        current += 1
        k += 1
    assert current <= 1
    assert all(v == "YetToStart" for v in values[k:])


class TestCriterion6WorkflowCoverage:
    def _enumerated_rows(self) -> dict[str, bool]:
        db3 = parse_parts_xml(three_part_xml())
        db1 = parse_parts_xml(RIGHT_WHEEL_XML)
        results: dict[str, bool] = {}
        reached: set[type] = set()

        def fresh(db=db3) -> Session:
            session = new_session(db)
            reached.add(type(session.state))
            return session

        def run(session: Session, *commands) -> Session:
            for command in commands:
                session.handle_command(command)
                state = session.state
                reached.add(type(state))
            return session

        s = run(fresh(), START)
        results["idle+start->mode_selection"] = isinstance(s.state, AwaitingControlMode) and (
            s.events[-1] == ev.ModeSelectionShown()
        )
        run(s, SELECT_SPEECH_MODE)
        results["control_selection"] = isinstance(s.state, AwaitingAssemblyMode)
        run(s, SELECT_FULL_ASSEMBLY)
        results["full_assembly_enters_step0"] = s.state == Guiding(0, GuidePhase.TO_LIFT)

        s2 = run(fresh(), START, SELECT_GESTURE_MODE, SELECT_PART_ASSEMBLY)
        results["part_assembly_selection"] = isinstance(s2.state, AwaitingPartSelection)
        run(s2, select_part(2))
        results["select_part_by_id"] = s2.state == Guiding(1, GuidePhase.TO_LIFT)
        before = len(s2.events)
        run(s2, select_part(99))
        results["unknown_part_invalid"] = isinstance(s2.events[before], ev.InvalidCommand) and (
            s2.state == Guiding(1, GuidePhase.TO_LIFT)
        )

        walk_to_step(s)
        reached.add(type(s.state))
        results["position_advances_to_step_active"] = s.state == StepActive(0)
        run(s, MORE_DETAILS)
        results["more_details_plays_video"] = isinstance(s.events[-1], ev.VideoPlay)
        run(s, REPEAT_INSTRUCTION)
        results["repeat_redisplays"] = isinstance(s.events[-1], ev.InstructionDisplayed)
        run(s, NEXT_INSTRUCTION)
        results["next_advances"] = s.state == Guiding(1, GuidePhase.TO_LIFT) and (
            s.statuses[0] is ev.StepStatus.COMPLETED
        )
        walk_to_step(s)
        run(s, PREVIOUS_INSTRUCTION)
        results["previous_reopens"] = s.state == Guiding(0, GuidePhase.TO_LIFT) and (
            s.statuses[1] is ev.StepStatus.YET_TO_START
        )
        before = len(s.events)
        walk_to_step(s)
        run(s, PREVIOUS_INSTRUCTION)
        results["previous_at_step0_invalid"] = any(
            isinstance(e, ev.InvalidCommand) for e in s.events[before:]
        )
        prior = s.state
        run(s, PAUSE)
        results["pause_wraps"] = s.state == Paused(resumes_to=prior)
        before = len(s.events)
        run(s, NEXT_INSTRUCTION)
        results["paused_rejects_commands"] = isinstance(s.events[before], ev.InvalidCommand)
        run(s, RESUME)
        results["resume_restores"] = s.state == prior
        run(s, STOP)
        results["stop_finishes"] = isinstance(s.state, Finished) and s.events[-1] == ev.Stopped()
        statuses_before = list(s.statuses)
        run(s, STOP)
        results["stop_idempotent"] = s.statuses == statuses_before
        run(s, START)
        results["start_after_stop_reinitializes"] = isinstance(
            s.state, AwaitingControlMode
        ) and all(v is ev.StepStatus.YET_TO_START for v in s.statuses)

        # Auto-stop after the last step in full assembly.
        s3 = run(fresh(db1), START, SELECT_SPEECH_MODE, SELECT_FULL_ASSEMBLY)
        walk_to_step(s3)
        run(s3, NEXT_INSTRUCTION)
        results["auto_stop_after_last_step"] = isinstance(s3.state, Finished) and (
            s3.events[-1] == ev.Stopped()
        ) and s3.statuses[0] is ev.StepStatus.COMPLETED

        # Part-mode completion returns to part selection; previous invalid.
        s4 = run(fresh(), START, SELECT_SPEECH_MODE, SELECT_PART_ASSEMBLY, select_part(1))
        walk_to_step(s4)
        reached.add(type(s4.state))
        before = len(s4.events)
        run(s4, PREVIOUS_INSTRUCTION)
        results["part_mode_previous_invalid"] = isinstance(s4.events[before], ev.InvalidCommand)
        run(s4, NEXT_INSTRUCTION)
        results["part_mode_next_returns_to_selection"] = isinstance(
            s4.state, AwaitingPartSelection
        )

        # Alarm row and invalid-position row.
        s5 = run(fresh(db1), START, SELECT_SPEECH_MODE, SELECT_FULL_ASSEMBLY)
        before = len(s5.events)
        s5.handle_position((5.0, 5.0))
        results["out_of_range_alarms"] = isinstance(s5.events[before], ev.Alarm)
        s6 = fresh(db1)
        s6.handle_position((0.0, 2.0))
        results["position_outside_guidance_invalid"] = isinstance(
            s6.events[-1], ev.InvalidCommand
        )

        # Idle rejects anything but Start/Stop.
        s7 = fresh(db1)
        s7.handle_command(NEXT_INSTRUCTION)
        results["idle_rejects_unlisted"] = isinstance(s7.events[-1], ev.InvalidCommand)

        expected_states = {
            Idle,
            AwaitingControlMode,
            AwaitingAssemblyMode,
            AwaitingPartSelection,
            Guiding,
            StepActive,
            Paused,
            Finished,
        }
        results["all_states_reached"] = expected_states <= reached
        return results

    def test_transition_rows_and_random_sequences(self):
        start = time.monotonic()
        rows = self._enumerated_rows()

        command_pool = [
            START, PAUSE, NEXT_INSTRUCTION, MORE_DETAILS, REPEAT_INSTRUCTION,
            PREVIOUS_INSTRUCTION, RESUME, STOP, SELECT_SPEECH_MODE,
            SELECT_GESTURE_MODE, SELECT_FULL_ASSEMBLY, SELECT_PART_ASSEMBLY,
            select_part(1), select_part(2), select_part(3), select_part(7),
        ]
        rng = random.Random(0x5EC)
        db3_text = three_part_xml()
        prefix_ok = True
        growth_ok = True
        for _ in range(500):
            session = new_session(parse_parts_xml(db3_text))
            session.handle_command(START)
            session.handle_command(SELECT_SPEECH_MODE)
            session.handle_command(SELECT_FULL_ASSEMBLY)
            for _ in range(rng.randint(0, 25)):
                before = len(session.events)
                if rng.random() < 0.7:
                    session.handle_command(rng.choice(command_pool))
                    growth_ok &= len(session.events) > before
                else:
                    session.handle_position((rng.uniform(-3, 3), rng.uniform(0.1, 5)))
                if session.assembly_mode is AssemblyMode.FULL:
                    try:
                        assert_prefix_law(session)
                    except AssertionError:
                        prefix_ok = False

        # Pause/Resume opacity at random non-paused points.
        opacity_ok = True
        for _ in range(100):
            seq = [rng.choice(command_pool) for _ in range(rng.randint(0, 15))]
            inject_at = rng.randint(0, len(seq))

            def run_once(inject: bool):
                session = new_session(parse_parts_xml(db3_text))
                for c in (START, SELECT_SPEECH_MODE, SELECT_FULL_ASSEMBLY):
                    session.handle_command(c)
                cut = (0, 0)
                for i, command in enumerate(seq + [None]):
                    if inject and i == inject_at and not isinstance(session.state, Paused):
                        mark = len(session.events)
                        session.handle_command(PAUSE)
                        session.handle_command(RESUME)
                        cut = (mark, len(session.events))
                    if command is not None:
                        session.handle_command(command)
                events = list(session.events)
                return session.state, list(session.statuses), events[: cut[0]] + events[cut[1]:]

            if run_once(False) != run_once(True):
                opacity_ok = False

        elapsed = time.monotonic() - start
        failed_rows = sorted(name for name, ok in rows.items() if not ok)
        passed = not failed_rows and prefix_ok and growth_ok and opacity_ok and elapsed < 10.0
        report(
            6,
            f"{len(rows)} transition rows exercised"
            + (f" (failing: {failed_rows})" if failed_rows else "")
            + f", prefix law over 500 random sequences, opacity, auto-stop; {elapsed:.2f}s",
            passed,
        )
        assert not failed_rows
        assert prefix_ok and growth_ok and opacity_ok
        assert elapsed < 10.0


class TestCriterion7AlarmSoundness:
    def test_alarm_iff_distance_exceeds_radius(self):
        rng = random.Random(0xA1A)
        mismatches = 0
        distance_errors = 0
        for _ in range(10_000):
            target = (rng.uniform(-5, 5), rng.uniform(0.1, 6.0))
            position = (rng.uniform(-6, 6), rng.uniform(-6, 6))
            radius = rng.uniform(0.05, 4.0)
            part = Part(1, "Widget", target, (0.0, 1.0), "a.jpg", "b.jpg", "lift", "put", "v.avi")
            session = new_session(PartsDb(parts=(part,)), range_radius=radius)
            session.handle_command(START)
            session.handle_command(SELECT_SPEECH_MODE)
            session.handle_command(SELECT_FULL_ASSEMBLY)
            before = len(session.events)
            session.handle_position(position)
            alarms = [e for e in session.events[before:] if isinstance(e, ev.Alarm)]
            expected_distance = math.sqrt(
                (position[0] - target[0]) ** 2 + (position[1] - target[1]) ** 2
            )
            if bool(alarms) != (expected_distance > radius):
                mismatches += 1
            elif alarms and abs(alarms[0].distance - expected_distance) > 1e-9:
                distance_errors += 1

        # Golden case: lift point to put point of the sample part.
        db = parse_parts_xml(RIGHT_WHEEL_XML)
        session = new_session(db, range_radius=1.5)
        for c in (START, SELECT_SPEECH_MODE, SELECT_FULL_ASSEMBLY):
            session.handle_command(c)
        session.handle_position((-1.0, 3.7))  # arrive at lift; now guiding to put
        before = len(session.events)
        session.handle_position((-1.0, 3.7))
        golden = [e for e in session.events[before:] if isinstance(e, ev.Alarm)]
        golden_expected = math.sqrt(1.4**2 + 1.7**2)
        golden_ok = (
            len(golden) == 1
            and abs(golden[0].distance - golden_expected) <= 1e-9
            and round(golden_expected, 3) == 2.202
            and golden_expected > 1.5
        )

        passed = mismatches == 0 and distance_errors == 0 and golden_ok
        report(
            7,
            f"alarm iff distance>radius over 10000 triples "
            f"({mismatches} mismatches, {distance_errors} distance errors); "
            f"golden 2.202m case alarms at radius 1.5",
            passed,
        )
        assert mismatches == 0 and distance_errors == 0
        assert golden_ok


class TestCriterion8ToolVerification:
    def test_iou_thresholds(self):
        before = np.zeros((20, 20))
        template = np.zeros((20, 20), dtype=bool)
        template.flat[:100] = True

        empty_red = verify_tool(before, before.copy(), template) is Signal.RED

        exact = before.copy()
        exact.flat[:100] = 100.0
        exact_green = verify_tool(before, exact, template) is Signal.GREEN

        partial = before.copy()
        partial.flat[:80] = 100.0
        partial.flat[100:110] = 100.0
        green_at_070 = verify_tool(before, partial, template, threshold=0.7) is Signal.GREEN
        red_at_075 = verify_tool(before, partial, template, threshold=0.75) is Signal.RED

        passed = empty_red and exact_green and green_at_070 and red_at_075
        report(
            8,
            "tool check: empty diff red, exact match green, IoU 80/110 green@0.70 red@0.75",
            passed,
        )
        assert empty_red and exact_green and green_at_070 and red_at_075


class TestCriterion9EndToEndReplay:
    def test_replay_deterministic_and_finishes(self, tmp_path):
        parts = tmp_path / "parts.xml"
        parts.write_text(RIGHT_WHEEL_XML)
        recording = tmp_path / "walkthrough.skstream"
        recording.write_text(
            serialize_recording(synth_trajectory(load_trajectory_spec(E2E_TRAJECTORY_JSON)))
        )
        script = tmp_path / "script.json"
        script.write_text(E2E_SCRIPT_JSON)

        def run() -> tuple[int, str]:
            out = io.StringIO()
            code = run_replay(
                str(recording), str(parts), script_path=str(script),
                range_radius=2.5, out=out, err=io.StringIO(),
            )
            return code, out.getvalue()

        code1, trace1 = run()
        code2, trace2 = run()
        names = [json.loads(line)["name"] for line in trace1.splitlines()]
        passed = (
            code1 == EXIT_FINISHED
            and code2 == EXIT_FINISHED
            and trace1 == trace2
            and names[-1] == "Stopped"
        )
        report(
            9,
            f"scripted replay: exit 0, {len(names)} events ending in Stopped, "
            f"byte-identical across two runs",
            passed,
        )
        assert code1 == EXIT_FINISHED and code2 == EXIT_FINISHED
        assert trace1 == trace2
        assert names[-1] == "Stopped"
