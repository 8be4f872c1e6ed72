/**
 * 2-D skeleton rendering: orthographic projection onto the x-y plane
 * with depth encoded as marker size (nearer joints draw larger).
 */

import type { WireFrame } from "./protocol.js";

export const JOINT_NAMES = [
  "Head",
  "ShoulderCenter",
  "ShoulderLeft",
  "ShoulderRight",
  "ElbowLeft",
  "ElbowRight",
  "WristLeft",
  "WristRight",
  "HandLeft",
  "HandRight",
  "Spine",
  "HipCenter",
  "HipLeft",
  "HipRight",
  "KneeLeft",
  "KneeRight",
  "AnkleLeft",
  "AnkleRight",
  "FootLeft",
  "FootRight",
] as const;

// 19 bones spanning the 20 joints.
export const BONES: readonly [string, string][] = [
  ["Head", "ShoulderCenter"],
  ["ShoulderCenter", "ShoulderLeft"],
  ["ShoulderCenter", "ShoulderRight"],
  ["ShoulderLeft", "ElbowLeft"],
  ["ElbowLeft", "WristLeft"],
  ["WristLeft", "HandLeft"],
  ["ShoulderRight", "ElbowRight"],
  ["ElbowRight", "WristRight"],
  ["WristRight", "HandRight"],
  ["ShoulderCenter", "Spine"],
  ["Spine", "HipCenter"],
  ["HipCenter", "HipLeft"],
  ["HipCenter", "HipRight"],
  ["HipLeft", "KneeLeft"],
  ["KneeLeft", "AnkleLeft"],
  ["AnkleLeft", "FootLeft"],
  ["HipRight", "KneeRight"],
  ["KneeRight", "AnkleRight"],
  ["AnkleRight", "FootRight"],
];

/** The canvas subset the renderer needs; tests substitute a recorder. */
export interface Canvas2D {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
}

export interface RenderOptions {
  width: number;
  height: number;
  /** Meters shown across the half-width; default 1.2. */
  halfSpan?: number;
  /** Reference depth for marker sizing; default 2.5 m. */
  referenceZ?: number;
  boneColor?: string;
  jointColor?: string;
}

export interface ProjectedJoint {
  name: string;
  x: number;
  y: number;
  radius: number;
  tracked: boolean;
}

export function projectFrame(frame: WireFrame, options: RenderOptions): ProjectedJoint[] {
  const halfSpan = options.halfSpan ?? 1.2;
  const referenceZ = options.referenceZ ?? 2.5;
  const scale = options.width / 2 / halfSpan;
  const cx = options.width / 2;
  const cy = options.height / 2;
  const projected: ProjectedJoint[] = [];
  for (const name of JOINT_NAMES) {
    const joint = frame.joints[name];
    if (!joint) {
      continue;
    }
    const [x, y, z, tracked] = joint;
    const safeZ = Math.max(z, 0.1);
    projected.push({
      name,
      x: cx + x * scale,
      y: cy - y * scale,
      radius: Math.min(12, Math.max(2, 4 * (referenceZ / safeZ))),
      tracked: tracked !== 0,
    });
  }
  return projected;
}

export function renderSkeleton(ctx: Canvas2D, frame: WireFrame, options: RenderOptions): void {
  ctx.clearRect(0, 0, options.width, options.height);
  const joints = projectFrame(frame, options);
  const byName = new Map(joints.map((j) => [j.name, j]));

  ctx.strokeStyle = options.boneColor ?? "#2d7";
  ctx.lineWidth = 2;
  for (const [a, b] of BONES) {
    const from = byName.get(a);
    const to = byName.get(b);
    if (!from || !to) {
      continue;
    }
    ctx.beginPath();
    ctx.moveTo(from.x, from.y);
    ctx.lineTo(to.x, to.y);
    ctx.stroke();
  }

  ctx.fillStyle = options.jointColor ?? "#9cf";
  for (const joint of joints) {
    ctx.beginPath();
    ctx.arc(joint.x, joint.y, joint.radius, 0, Math.PI * 2);
    ctx.fill();
  }
}
