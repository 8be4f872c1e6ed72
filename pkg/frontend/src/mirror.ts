/**
 * Console-side mirror of the session.
 *
 * Derived purely from harness messages plus local input: the mirror
 * never advances on a button press, only on the events the harness
 * sends back. State inference uses only unambiguous events (selection
 * screens, StatusChanged-to-Current, TargetReached, Paused/Resumed,
 * Stopped); everything else lands in the feed.
 */

import type { EventMessage, OutboundMessage, StatusesMessage, WireFrame } from "./protocol.js";

export type MirrorState =
  | { kind: "Idle" }
  | { kind: "AwaitingControlMode" }
  | { kind: "AwaitingAssemblyMode" }
  | { kind: "AwaitingPartSelection" }
  | { kind: "Guiding"; step: number; phase: "ToLift" | "ToPut" }
  | { kind: "StepActive"; step: number }
  | { kind: "Paused" }
  | { kind: "Finished" };

export type ConnectionStatus = "disconnected" | "connecting" | "connected";

export interface FeedEntry {
  seq: number;
  text: string;
  invalid: boolean;
}

const FEED_LIMIT = 250;
const FRAME_LIMIT = 64;

export class ConsoleMirror {
  connection: ConnectionStatus = "disconnected";
  state: MirrorState = { kind: "Idle" };
  statuses: string[] = [];
  feed: FeedEntry[] = [];
  frames: WireFrame[] = [];
  lastStatuses: StatusesMessage | null = null;
  lastError: string | null = null;
  private resumeTo: MirrorState = { kind: "Idle" };
  private seq = 0;

  /** Local input: remember frames the console itself sent, for rendering. */
  recordSentFrame(frame: WireFrame): void {
    this.frames.push(frame);
    if (this.frames.length > FRAME_LIMIT) {
      this.frames.shift();
    }
  }

  latestFrame(): WireFrame | null {
    return this.frames.length > 0 ? this.frames[this.frames.length - 1]! : null;
  }

  apply(message: OutboundMessage): void {
    switch (message.kind) {
      case "ack":
        return;
      case "error":
        this.lastError = message.message;
        this.pushFeed(`error: ${message.message}`, true);
        return;
      case "statuses":
        this.lastStatuses = message;
        this.pushFeed(
          `statuses: ${message.state} [${message.list.map((e) => e.status).join(", ")}]`,
          false,
        );
        return;
      case "event":
        this.applyEvent(message);
        return;
    }
  }

  private applyEvent(event: EventMessage): void {
    switch (event.name) {
      case "ModeSelectionShown":
        this.state = { kind: "AwaitingControlMode" };
        // A fresh mode selection also means a (re)initialized session.
        this.statuses = this.statuses.map(() => "YetToStart");
        break;
      case "AssemblySelectionShown":
        this.state = { kind: "AwaitingAssemblyMode" };
        break;
      case "PartSelectionShown":
        this.state = { kind: "AwaitingPartSelection" };
        break;
      case "StatusChanged":
        if (event.step !== undefined && event.status !== undefined) {
          this.setStatus(event.step, event.status);
          if (event.status === "Current") {
            this.state = { kind: "Guiding", step: event.step, phase: "ToLift" };
          }
        }
        break;
      case "TargetReached":
        if (event.step !== undefined) {
          this.state =
            event.target === "put"
              ? { kind: "StepActive", step: event.step }
              : { kind: "Guiding", step: event.step, phase: "ToPut" };
        }
        break;
      case "Paused":
        this.resumeTo = this.state;
        this.state = { kind: "Paused" };
        break;
      case "Resumed":
        this.state = this.resumeTo;
        break;
      case "Stopped":
        this.state = { kind: "Finished" };
        break;
      default:
        break;
    }
    this.pushFeed(describeEvent(event), event.name === "InvalidCommand");
  }

  private setStatus(step: number, status: string): void {
    while (this.statuses.length <= step) {
      this.statuses.push("YetToStart");
    }
    this.statuses[step] = status;
  }

  private pushFeed(text: string, invalid: boolean): void {
    this.feed.push({ seq: this.seq++, text, invalid });
    if (this.feed.length > FEED_LIMIT) {
      this.feed.shift();
    }
  }
}

export function describeEvent(event: EventMessage): string {
  switch (event.name) {
    case "InstructionDisplayed":
      return `instruction (step ${event.step}): ${event.text} [${event.image}]`;
    case "VideoPlay":
      return `video placeholder: ${event.path}`;
    case "InstructionRepeated":
      return `instruction repeated (step ${event.step})`;
    case "Alarm":
      return `ALARM: ${event.distance?.toFixed(3)} m from target`;
    case "StatusChanged":
      return `step ${event.step} -> ${event.status}`;
    case "TargetReached":
      return `reached ${event.target} point of step ${event.step}`;
    case "InvalidCommand":
      return `rejected: ${event.reason}`;
    default:
      return event.name;
  }
}

/**
 * Quiescence check used by the tests: the event-derived mirror must
 * agree with a statuses snapshot the harness returned.
 */
export function mirrorMatchesSnapshot(mirror: ConsoleMirror, snapshot: StatusesMessage): boolean {
  if (mirror.state.kind !== snapshot.state) {
    return false;
  }
  return snapshot.list.every((entry, index) => {
    const mirrored = mirror.statuses[index] ?? "YetToStart";
    return mirrored === entry.status;
  });
}
