/**
 * Wire protocol "gav1": newline-delimited JSON messages.
 *
 * Inbound (console -> harness): hello, speech, frame, gesture, status.
 * Outbound (harness -> console): event, statuses, ack, error.
 */

export const PROTOCOL_VERSION = "gav1";

export type JointTuple = [number, number, number, number]; // x, y, z, tracked

export interface WireFrame {
  kind: "frame";
  t: number;
  joints: Record<string, JointTuple>;
}

export type InboundMessage =
  | { kind: "hello"; version: string }
  | { kind: "speech"; text: string }
  | { kind: "gesture"; name: string }
  | { kind: "status" }
  | WireFrame;

export interface EventMessage {
  kind: "event";
  name: string;
  step?: number;
  image?: string;
  text?: string;
  path?: string;
  distance?: number;
  status?: string;
  target?: string;
  reason?: string;
}

export interface StatusesMessage {
  kind: "statuses";
  list: { id: number; status: string }[];
  state: string;
  step?: number;
  phase?: string;
}

export type OutboundMessage =
  | EventMessage
  | StatusesMessage
  | { kind: "ack" }
  | { kind: "error"; message: string };

export function encode(message: InboundMessage): string {
  return JSON.stringify(message) + "\n";
}

export function decode(line: string): OutboundMessage {
  let parsed: unknown;
  try {
    parsed = JSON.parse(line);
  } catch (err) {
    throw new Error(`undecodable line from harness: ${line}`);
  }
  if (typeof parsed !== "object" || parsed === null || Array.isArray(parsed)) {
    throw new Error(`harness message must be an object: ${line}`);
  }
  const kind = (parsed as { kind?: unknown }).kind;
  if (kind !== "event" && kind !== "statuses" && kind !== "ack" && kind !== "error") {
    throw new Error(`unknown harness message kind: ${String(kind)}`);
  }
  return parsed as OutboundMessage;
}

export function hello(): InboundMessage {
  return { kind: "hello", version: PROTOCOL_VERSION };
}

export function speech(text: string): InboundMessage {
  return { kind: "speech", text };
}

export function gesture(name: string): InboundMessage {
  return { kind: "gesture", name };
}

export function statusQuery(): InboundMessage {
  return { kind: "status" };
}

/** Splits a byte/string stream into complete lines, buffering partials. */
export class LineBuffer {
  private pending = "";

  push(chunk: string): string[] {
    this.pending += chunk;
    const parts = this.pending.split("\n");
    this.pending = parts.pop() ?? "";
    return parts.filter((line) => line.length > 0);
  }
}
