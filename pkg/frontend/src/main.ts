// DOM shell: binds sliders, presets, gauges, sphere and region map to the
// pure view-model modules. All mathematics happens server-side.

import { ApiClient, EvalScheduler } from "./api.js";
import { display4, fullPrecision } from "./format.js";
import { gaugeView } from "./gauges.js";
import {
  ViewState,
  clearPreset,
  initialState,
  lockedParams,
  warnings,
  withBanner,
  withParam,
  withParams,
  withPreset,
  withScene,
} from "./model.js";
import { NAMED_PRESETS, SLIDER_STEP, sliderBound } from "./params.js";
import { RegionView, regionSVG, regionView } from "./regionMap.js";
import { sphereSVG } from "./sphere.js";
import { CatalogDoc, PARAM_NAMES, SubCase } from "./types.js";
import { arrowView } from "./vectors.js";

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8350";
const api = new ApiClient(apiBase);

let state: ViewState = initialState();
let catalog: CatalogDoc | null = null;
let region: RegionView | null = null;
let regionStale = false;

const scheduler = new EvalScheduler(
  (params) => api.evalParams(params),
  (doc) => {
    state = withScene(state, doc);
    render();
  },
  (err) => {
    state = withBanner(state, String(err));
    render();
  },
);

function requestEval(): void {
  scheduler.request(state.params);
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

// ---- sliders --------------------------------------------------------------

function buildSliders(): void {
  const host = el<HTMLDivElement>("sliders");
  host.innerHTML = "";
  for (const name of PARAM_NAMES) {
    const bound = sliderBound(name);
    const row = document.createElement("div");
    row.className = "slider-row";
    row.innerHTML =
      `<label for="slider-${name}">${name}</label>` +
      `<input type="range" id="slider-${name}" min="${-bound}" max="${bound}" ` +
      `step="${SLIDER_STEP}" value="0"/>` +
      `<span class="value" id="value-${name}">0.0000</span>`;
    host.appendChild(row);
    const input = row.querySelector("input")!;
    input.addEventListener("input", () => {
      // dragging a slot slider keeps the preset (and its locks) active,
      // tracing a trajectory; locked sliders are disabled and never fire
      state = withParam(state, name, Number(input.value));
      requestEval();
      render();
    });
  }
}

function syncSliders(): void {
  const locked = new Set(lockedParams(state));
  for (const name of PARAM_NAMES) {
    const input = el<HTMLInputElement>(`slider-${name}`);
    if (document.activeElement !== input) input.value = String(state.params[name]);
    input.disabled = locked.has(name);
    const value = el<HTMLSpanElement>(`value-${name}`);
    value.textContent = display4(state.params[name]);
    value.title = fullPrecision(state.params[name]);
  }
}

// ---- presets ----------------------------------------------------------------

function presetSubCase(selector: string): { clusterId: string; sub: SubCase } | null {
  if (!catalog) return null;
  const [clusterId, subName] = selector.split("|");
  const cluster = catalog.clusters.find((c) => c.cluster_id === clusterId);
  const sub = cluster?.sub_cases.find((s) => s.name === subName);
  return cluster && sub ? { clusterId, sub } : null;
}

function buildPresets(): void {
  const select = el<HTMLSelectElement>("preset-select");
  select.innerHTML = '<option value="">custom</option>';
  for (const preset of NAMED_PRESETS) {
    select.add(new Option(preset.label, `named:${preset.id}`));
  }
  if (catalog) {
    for (const cluster of catalog.clusters) {
      for (const sub of cluster.sub_cases) {
        select.add(
          new Option(`cluster ${cluster.cluster_id} ${sub.name}`, `${cluster.cluster_id}|${sub.name}`),
        );
      }
    }
  }
  select.addEventListener("change", applyPresetFromControls);
  el<HTMLInputElement>("preset-s").addEventListener("input", applyPresetFromControls);
  el<HTMLInputElement>("preset-t").addEventListener("input", applyPresetFromControls);
}

function applyPresetFromControls(): void {
  const selector = el<HTMLSelectElement>("preset-select").value;
  if (!selector) {
    state = clearPreset(state);
    render();
    return;
  }
  if (selector.startsWith("named:")) {
    const preset = NAMED_PRESETS.find((p) => `named:${p.id}` === selector);
    if (preset) {
      state = withParams(state, preset.params);
      requestEval();
      render();
    }
    return;
  }
  const found = presetSubCase(selector);
  if (!found) return;
  const s = Number(el<HTMLInputElement>("preset-s").value) || 0;
  const t = Number(el<HTMLInputElement>("preset-t").value) || 0;
  const values = found.sub.slots.length === 2 ? [s, t] : [s, t, 0, 0];
  state = withPreset(state, found.clusterId, found.sub, values);
  requestEval();
  render();
}

// ---- region map -------------------------------------------------------------

async function scanRegion(): Promise<void> {
  const selector = el<HTMLSelectElement>("region-cluster").value;
  const [clusterId, subName] = selector.split("|");
  try {
    const doc = await api.scan({
      cluster: clusterId,
      sub: subName,
      min: -1,
      max: 1,
      step: Number(el<HTMLInputElement>("region-step").value) || 0.05,
    });
    region = regionView(doc);
    regionStale = false;
  } catch (err) {
    regionStale = true; // keep showing the previous map, marked stale
    state = withBanner(state, String(err));
  }
  render();
}

function buildRegionControls(): void {
  const select = el<HTMLSelectElement>("region-cluster");
  select.innerHTML = "";
  if (catalog) {
    for (const cluster of catalog.clusters) {
      if (cluster.arity !== 2) continue;
      for (const sub of cluster.sub_cases) {
        select.add(
          new Option(`${cluster.cluster_id} ${sub.name}`, `${cluster.cluster_id}|${sub.name}`),
        );
      }
    }
  }
  el<HTMLButtonElement>("region-scan").addEventListener("click", () => void scanRegion());
  el<HTMLDivElement>("region-host").addEventListener("click", (event) => {
    const target = event.target as Element;
    if (target.tagName !== "rect" || !region) return;
    const s = Number(target.getAttribute("data-s"));
    const t = Number(target.getAttribute("data-t"));
    const selector = el<HTMLSelectElement>("region-cluster").value;
    const found = presetSubCase(selector);
    if (!found) return;
    state = withPreset(state, found.clusterId, found.sub, [s, t]);
    requestEval();
    render();
  });
}

// ---- rendering ---------------------------------------------------------------

function renderScene(): void {
  const host = el<HTMLDivElement>("sphere-host");
  if (!state.scene) {
    host.innerHTML = "<p class=\"placeholder\">waiting for first evaluation…</p>";
    return;
  }
  const arrows = (["u", "v", "w"] as const).map((label) =>
    arrowView(label, state.scene!.bloch[label]),
  );
  host.innerHTML = sphereSVG(arrows, state.trail);

  const inv = state.scene.invariants_block;
  for (const [id, value] of [
    ["lhs1", inv.lhs1],
    ["lhs2", inv.lhs2],
    ["purity", inv.purity],
  ] as const) {
    const node = el<HTMLSpanElement>(`stat-${id}`);
    node.textContent = display4(value);
    node.title = fullPrecision(value);
  }
  el<HTMLSpanElement>("stat-eigs").textContent = inv.eigenvalues
    .map((v) => display4(v))
    .join(", ");
  const badge = el<HTMLSpanElement>("badge");
  badge.textContent = inv.physical ? "physical" : "unphysical";
  badge.className = inv.physical ? "badge ok" : "badge bad";

  for (const arrow of arrows) {
    const node = el<HTMLSpanElement>(`len-${arrow.label}`);
    node.textContent = display4(arrow.length);
    node.title = fullPrecision(arrow.length);
  }

  const gaugeHost = el<HTMLDivElement>("gauges");
  gaugeHost.innerHTML = (["lhs1", "lhs2"] as const)
    .map((key) => {
      const gauge = gaugeView(inv[key]);
      return (
        `<div class="gauge"><span class="gauge-label">${key}</span>` +
        `<div class="gauge-bar"><div class="gauge-fill${gauge.over ? " over" : ""}" ` +
        `style="width:${(gauge.fraction * 100).toFixed(2)}%"></div>` +
        `<div class="gauge-tick" style="left:${(gauge.thresholdFraction * 100).toFixed(2)}%"></div></div>` +
        `<span class="gauge-value" title="${fullPrecision(gauge.value)}">${display4(gauge.value)}</span></div>`
      );
    })
    .join("");

  el<HTMLUListElement>("warnings").innerHTML = warnings(state)
    .map((w) => `<li>${w}</li>`)
    .join("");
}

function render(): void {
  syncSliders();
  renderScene();
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = state.banner ?? "";
  banner.style.display = state.banner ? "block" : "none";
  const regionHost = el<HTMLDivElement>("region-host");
  regionHost.innerHTML = region
    ? regionSVG(region)
    : '<p class="placeholder">scan a cluster to see its admissible region</p>';
  const staleBadge = el<HTMLSpanElement>("region-stale");
  staleBadge.style.display = regionStale ? "inline" : "none";
}

async function start(): Promise<void> {
  buildSliders();
  try {
    catalog = await api.clusters();
  } catch (err) {
    state = withBanner(state, `catalog unavailable: ${String(err)}`);
  }
  buildPresets();
  buildRegionControls();
  requestEval();
  render();
}

void start();
