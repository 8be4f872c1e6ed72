/** Minimal reader for SKSTREAM v1 recordings, for console-side replay. */

import type { JointTuple, WireFrame } from "./protocol.js";

export interface Recording {
  fps: number;
  frames: WireFrame[];
}

const HEADER = /^SKSTREAM v1 fps=([-0-9.eE]+)$/;

export function parseRecording(text: string): Recording {
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new Error("empty recording");
  }
  const header = HEADER.exec(lines[0]!);
  if (!header) {
    throw new Error(`bad recording header: ${lines[0]}`);
  }
  const fps = Number(header[1]);
  const frames: WireFrame[] = [];
  for (const line of lines.slice(1)) {
    const tokens = line.split(" ");
    const tToken = tokens[0]!;
    if (!tToken.startsWith("t=")) {
      throw new Error(`bad frame line: ${line}`);
    }
    const joints: Record<string, JointTuple> = {};
    for (const token of tokens.slice(1)) {
      const sep = token.indexOf(":");
      if (sep < 0) {
        throw new Error(`bad joint token: ${token}`);
      }
      const name = token.slice(0, sep);
      const parts = token.slice(sep + 1).split(",");
      if (parts.length !== 4) {
        throw new Error(`bad joint coordinates: ${token}`);
      }
      joints[name] = [
        Number(parts[0]),
        Number(parts[1]),
        Number(parts[2]),
        Number(parts[3]),
      ];
    }
    frames.push({ kind: "frame", t: Number(tToken.slice(2)), joints });
  }
  return { fps, frames };
}
