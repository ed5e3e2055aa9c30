// Explorer view-state and its pure transitions. All displayed numbers come
// from the most recent service response held in `scene`; the client never
// recomputes the mathematics.

import { sliderBound } from "./params.js";
import {
  PARAM_NAMES,
  ParamName,
  Params,
  SceneDocument,
  SubCase,
  zeroParams,
} from "./types.js";

export const TRAIL_LIMIT = 200;

export interface TrailPoint {
  u: [number, number, number];
  v: [number, number, number];
  w: [number, number, number];
}

export interface ActivePreset {
  clusterId: string;
  subCase: SubCase;
  slotValues: number[];
}

export interface ViewState {
  params: Params;
  activePreset: ActivePreset | null;
  scene: SceneDocument | null;
  trail: TrailPoint[];
  banner: string | null;
}

export function initialState(): ViewState {
  return { params: zeroParams(), activePreset: null, scene: null, trail: [], banner: null };
}

/** Parameters that a preset pins to zero (every non-slot parameter). */
export function lockedParams(state: ViewState): ParamName[] {
  if (!state.activePreset) return [];
  const slots = new Set(state.activePreset.subCase.slots);
  return PARAM_NAMES.filter((name) => !slots.has(name));
}

export function clampToSlider(name: ParamName, value: number): number {
  const bound = sliderBound(name);
  return Math.min(bound, Math.max(-bound, value));
}

/** Slider move; locked parameters are ignored while a preset is active. */
export function withParam(state: ViewState, name: ParamName, value: number): ViewState {
  if (lockedParams(state).includes(name)) return state;
  return { ...state, params: { ...state.params, [name]: clampToSlider(name, value) } };
}

/** Jump the sliders to a cluster sub-case; non-slot sliders lock at zero. */
export function withPreset(
  state: ViewState,
  clusterId: string,
  subCase: SubCase,
  slotValues: number[],
): ViewState {
  if (slotValues.length !== subCase.slots.length) {
    throw new Error(`${subCase.name} takes ${subCase.slots.length} slot values`);
  }
  const params = zeroParams();
  subCase.slots.forEach((slot, i) => {
    params[slot] = slotValues[i];
  });
  return {
    ...state,
    params,
    activePreset: { clusterId, subCase, slotValues: [...slotValues] },
    trail: [], // a preset starts a fresh trajectory
  };
}

/** Set all 8 parameters directly (named presets, region-map clicks). */
export function withParams(state: ViewState, params: Params, keepPreset = false): ViewState {
  return {
    ...state,
    params: { ...params },
    activePreset: keepPreset ? state.activePreset : null,
    trail: keepPreset ? state.trail : [],
  };
}

export function clearPreset(state: ViewState): ViewState {
  return { ...state, activePreset: null };
}

function endpoint(block: SceneDocument["bloch"]["u"]): [number, number, number] {
  const magnitudes = block.squares.map((s) => Math.sqrt(Math.abs(s)));
  const norm = Math.hypot(...magnitudes);
  if (norm === 0) return [0, 0, 0];
  const scale = block.length / norm;
  return [magnitudes[0] * scale, magnitudes[1] * scale, magnitudes[2] * scale];
}

/** Apply a fresh service response and extend the trail (capped). */
export function withScene(state: ViewState, scene: SceneDocument): ViewState {
  const point: TrailPoint = {
    u: endpoint(scene.bloch.u),
    v: endpoint(scene.bloch.v),
    w: endpoint(scene.bloch.w),
  };
  const trail = [...state.trail, point];
  if (trail.length > TRAIL_LIMIT) trail.splice(0, trail.length - TRAIL_LIMIT);
  return { ...state, scene, trail, banner: null };
}

export function withBanner(state: ViewState, banner: string): ViewState {
  return { ...state, banner };
}

/** Warnings derived from the current scene (negative squares, unphysical). */
export function warnings(state: ViewState): string[] {
  if (!state.scene) return [];
  const out: string[] = [];
  for (const label of ["u", "v", "w"] as const) {
    const flags = state.scene.bloch[label].negative_components;
    if (flags.some(Boolean)) {
      const which = flags.flatMap((f, i) => (f ? [i + 1] : []));
      out.push(`${label}: negative squared component ${which.join(", ")}`);
    }
  }
  if (!state.scene.invariants_block.physical) {
    out.push("point is unphysical (rho has a negative eigenvalue)");
  }
  return out;
}
