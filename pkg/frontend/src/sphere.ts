// Unit-sphere scene: wireframe (radius exactly 1 in scene units), the three
// vector arrows, and the trail of previous endpoints. Arrows with any
// negative squared component render dashed.

import { TrailPoint } from "./model.js";
import { ArrowView, project } from "./vectors.js";

export const ARROW_COLORS: Record<string, string> = {
  u: "#1d6fb8",
  v: "#c0392b",
  w: "#1e8449",
};

const SIZE = 360;
const RADIUS_PX = 150;
const CX = SIZE / 2;
const CY = SIZE / 2;

function wireframe(): string {
  const rim = `<circle cx="${CX}" cy="${CY}" r="${RADIUS_PX}" class="sphere-rim"/>`;
  const equator =
    `<ellipse cx="${CX}" cy="${CY}" rx="${RADIUS_PX}" ry="${RADIUS_PX * 0.35}" class="sphere-wire"/>`;
  const meridian =
    `<ellipse cx="${CX}" cy="${CY}" rx="${RADIUS_PX * 0.35}" ry="${RADIUS_PX}" class="sphere-wire"/>`;
  const axes = (
    [
      [[1.15, 0, 0], "1"],
      [[0, 1.15, 0], "2"],
      [[0, 0, 1.15], "3"],
    ] as [[number, number, number], string][]
  )
    .map(([tip, label]) => {
      const [x, y] = project(tip, RADIUS_PX, CX, CY);
      return (
        `<line x1="${CX}" y1="${CY}" x2="${x}" y2="${y}" class="sphere-axis"/>` +
        `<text x="${x}" y="${y}" class="axis-label">${label}</text>`
      );
    })
    .join("");
  return rim + equator + meridian + axes;
}

function arrowSVG(arrow: ArrowView): string {
  const [x, y] = project(arrow.endpoint, RADIUS_PX, CX, CY);
  const dashed = arrow.anyNegative ? ' stroke-dasharray="6 4"' : "";
  const color = ARROW_COLORS[arrow.label] ?? "#333";
  const badge = arrow.anyNegative
    ? `<text x="${x + 8}" y="${y - 8}" class="neg-badge" fill="${color}">-</text>`
    : "";
  return (
    `<line x1="${CX}" y1="${CY}" x2="${x}" y2="${y}" stroke="${color}" ` +
    `stroke-width="2.5"${dashed} class="arrow arrow-${arrow.label}"/>` +
    `<circle cx="${x}" cy="${y}" r="4" fill="${color}"/>` +
    `<text x="${x + 8}" y="${y + 4}" fill="${color}" class="arrow-label">${arrow.label}</text>` +
    badge
  );
}

function trailSVG(trail: TrailPoint[]): string {
  const dots: string[] = [];
  for (const point of trail) {
    for (const label of ["u", "v", "w"] as const) {
      const [x, y] = project(point[label], RADIUS_PX, CX, CY);
      dots.push(
        `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="1.5" ` +
          `fill="${ARROW_COLORS[label]}" opacity="0.3"/>`,
      );
    }
  }
  return dots.join("");
}

export function sphereSVG(arrows: ArrowView[], trail: TrailPoint[]): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${SIZE}" height="${SIZE}" ` +
    `viewBox="0 0 ${SIZE} ${SIZE}" class="sphere-scene">` +
    wireframe() +
    trailSVG(trail) +
    arrows.map(arrowSVG).join("") +
    "</svg>"
  );
}
