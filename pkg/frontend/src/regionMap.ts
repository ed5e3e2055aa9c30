// Region-map view-model and SVG raster. Three verdict classes: physical,
// fails only the second inequality (the negative-determinant shell), and
// fails the first. Cells carry data attributes so a click can recover (s, t).

import { RegionCell, RegionGridDoc } from "./types.js";

export type CellClass = "physical" | "fails-ineq2-only" | "fails-ineq1";

const TOLERANCE = 1e-10;

export const CLASS_COLORS: Record<CellClass, string> = {
  physical: "#2a9d8f",
  "fails-ineq2-only": "#e9c46a",
  "fails-ineq1": "#e76f51",
};

export function cellClass(cell: RegionCell): CellClass {
  if (cell.physical) return "physical";
  return cell.lhs1 <= 1 + TOLERANCE ? "fails-ineq2-only" : "fails-ineq1";
}

export interface RegionView {
  cluster: string;
  subCase: string;
  sValues: number[];
  tValues: number[];
  cells: { s: number; t: number; cls: CellClass; lhs2: number }[];
}

export function regionView(doc: RegionGridDoc): RegionView {
  return {
    cluster: doc.cluster,
    subCase: doc.sub_case,
    sValues: doc.s_values,
    tValues: doc.t_values,
    cells: doc.cells.map((cell) => ({
      s: cell.s,
      t: cell.t,
      cls: cellClass(cell),
      lhs2: cell.lhs2,
    })),
  };
}

export function cellAt(view: RegionView, s: number, t: number, tol = 1e-9) {
  return view.cells.find((c) => Math.abs(c.s - s) <= tol && Math.abs(c.t - t) <= tol);
}

/** One rect per cell; s runs right, t runs up. */
export function regionSVG(view: RegionView, cellPx = 12): string {
  const ns = view.sValues.length;
  const nt = view.tValues.length;
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" class="region-map" ` +
      `width="${ns * cellPx}" height="${nt * cellPx}" ` +
      `viewBox="0 0 ${ns * cellPx} ${nt * cellPx}">`,
  ];
  view.cells.forEach((cell, idx) => {
    const i = Math.floor(idx / nt);
    const j = idx % nt;
    const x = i * cellPx;
    const y = (nt - 1 - j) * cellPx;
    parts.push(
      `<rect x="${x}" y="${y}" width="${cellPx}" height="${cellPx}" ` +
        `fill="${CLASS_COLORS[cell.cls]}" data-s="${cell.s}" data-t="${cell.t}">` +
        `<title>s=${cell.s}, t=${cell.t}: ${cell.cls}</title></rect>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}
