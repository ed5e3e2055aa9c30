// Slider ranges and canonical presets. Ranges follow the sampler box:
// the first inequality alone caps |x|, |y| at sqrt(2/3) and the other six
// parameters at 1/sqrt(3); points outside can never be physical.

import { ParamName, Params, zeroParams } from "./types.js";

export const SLIDER_STEP = 0.001;

const XY_BOUND = Math.sqrt(2 / 3);
const REST_BOUND = 1 / Math.sqrt(3);

export function sliderBound(name: ParamName): number {
  return name === "x" || name === "y" ? XY_BOUND : REST_BOUND;
}

export interface NamedPreset {
  id: string;
  label: string;
  params: Params;
}

export const MAXIMALLY_MIXED: NamedPreset = {
  id: "maximally-mixed",
  label: "maximally mixed",
  params: zeroParams(),
};

export const PURE_BASIS: NamedPreset = {
  id: "pure-basis",
  label: "pure basis state",
  params: { ...zeroParams(), x: 1 / Math.sqrt(2), y: 1 / Math.sqrt(6) },
};

export const NAMED_PRESETS = [MAXIMALLY_MIXED, PURE_BASIS];
