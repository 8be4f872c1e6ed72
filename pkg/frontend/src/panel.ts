/**
 * Command panel model: every command the harness understands, with an
 * enabled-in-state hint. Controls that are invalid in the mirrored state
 * render disabled but remain clickable so rejected commands (and their
 * InvalidCommand events) can be exercised deliberately.
 */

import type { MirrorState } from "./mirror.js";
import { gesture, speech, type InboundMessage } from "./protocol.js";

export interface ButtonSpec {
  id: string;
  label: string;
  group: "session" | "step" | "selection" | "gesture";
  message: InboundMessage;
  enabledIn: (state: MirrorState) => boolean;
}

const inStep = (state: MirrorState) => state.kind === "Guiding" || state.kind === "StepActive";
const always = () => true;

export const GESTURE_NAMES = [
  "HandsUp",
  "RightSweep",
  "ZoomIn",
  "ZoomOut",
  "LeftSweep",
  "HandsForward",
  "HandsUpFolded",
] as const;

export function commandButtons(): ButtonSpec[] {
  const buttons: ButtonSpec[] = [
    {
      id: "start",
      label: "Start",
      group: "session",
      message: speech("start"),
      enabledIn: (s) => s.kind === "Idle" || s.kind === "Finished",
    },
    {
      id: "pause",
      label: "Pause",
      group: "session",
      message: speech("pause"),
      enabledIn: (s) => s.kind !== "Idle" && s.kind !== "Paused",
    },
    {
      id: "resume",
      label: "Resume",
      group: "session",
      message: speech("resume"),
      enabledIn: (s) => s.kind === "Paused",
    },
    { id: "stop", label: "Stop", group: "session", message: speech("stop"), enabledIn: always },
    {
      id: "next",
      label: "Next Instruction",
      group: "step",
      message: speech("next instruction"),
      enabledIn: (s) => s.kind === "StepActive",
    },
    {
      id: "previous",
      label: "Previous Instruction",
      group: "step",
      message: speech("previous instruction"),
      enabledIn: (s) => s.kind === "StepActive",
    },
    {
      id: "details",
      label: "More Details",
      group: "step",
      message: speech("more details"),
      enabledIn: inStep,
    },
    {
      id: "repeat",
      label: "Repeat Instruction",
      group: "step",
      message: speech("repeat instruction"),
      enabledIn: inStep,
    },
    {
      id: "speech-mode",
      label: "Speech Mode",
      group: "selection",
      message: speech("speech mode"),
      enabledIn: (s) => s.kind === "AwaitingControlMode",
    },
    {
      id: "gesture-mode",
      label: "Gesture Mode",
      group: "selection",
      message: speech("gesture mode"),
      enabledIn: (s) => s.kind === "AwaitingControlMode",
    },
    {
      id: "full-assembly",
      label: "Full Assembly",
      group: "selection",
      message: speech("full assembly"),
      enabledIn: (s) => s.kind === "AwaitingAssemblyMode",
    },
    {
      id: "part-assembly",
      label: "Part Assembly",
      group: "selection",
      message: speech("part assembly"),
      enabledIn: (s) => s.kind === "AwaitingAssemblyMode",
    },
  ];
  for (const name of GESTURE_NAMES) {
    buttons.push({
      id: `gesture-${name.toLowerCase()}`,
      label: name,
      group: "gesture",
      message: gesture(name),
      enabledIn: (s) => s.kind !== "Idle" && s.kind !== "Finished",
    });
  }
  return buttons;
}

export function selectPartMessage(partId: number): InboundMessage {
  return speech(`part ${partId}`);
}
