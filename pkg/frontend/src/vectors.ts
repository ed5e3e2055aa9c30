// Arrow view-models: how a vector block turns into drawable geometry.
// Component signs are not defined by the construction, so arrows point into
// the nonnegative octant with per-component magnitudes sqrt(|square|); the
// arrow length is the reported vector length sqrt(max(0, sum of squares)).

import { VectorBlock } from "./types.js";

export interface ArrowView {
  label: string;
  length: number;
  magnitudes: [number, number, number];
  /** Endpoint in scene units; its norm equals `length`. */
  endpoint: [number, number, number];
  negativeComponents: [boolean, boolean, boolean];
  anyNegative: boolean;
}

export function arrowView(label: string, block: VectorBlock): ArrowView {
  const magnitudes = block.squares.map((s) => Math.sqrt(Math.abs(s))) as [
    number,
    number,
    number,
  ];
  const norm = Math.hypot(...magnitudes);
  const scale = norm > 0 ? block.length / norm : 0;
  return {
    label,
    length: block.length,
    magnitudes,
    endpoint: [magnitudes[0] * scale, magnitudes[1] * scale, magnitudes[2] * scale],
    negativeComponents: [...block.negative_components] as [boolean, boolean, boolean],
    anyNegative: block.negative_components.some(Boolean),
  };
}

/** Fixed isometric-style projection of scene coordinates onto the screen. */
export function project(
  point: [number, number, number],
  radiusPx: number,
  cx: number,
  cy: number,
): [number, number] {
  const [c1, c2, c3] = point;
  const x = (c1 - c2) * Math.SQRT1_2;
  const y = c3 - (c1 + c2) * 0.35;
  return [cx + x * radiusPx, cy - y * radiusPx];
}
