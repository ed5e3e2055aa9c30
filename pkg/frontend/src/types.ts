// Wire types mirroring the service's JSON schemas (schemas/*.schema.json).

export const PARAM_NAMES = [
  "x", "y", "a", "b", "alpha1", "beta1", "alpha2", "beta2",
] as const;

export type ParamName = (typeof PARAM_NAMES)[number];
export type Params = Record<ParamName, number>;

export interface VectorBlock {
  squares: [number, number, number];
  length: number;
  negative_components: [boolean, boolean, boolean];
}

export interface SceneDocument {
  schema_version: number;
  params: Params;
  invariants_block: {
    lhs1: number;
    lhs2: number;
    purity: number;
    eigenvalues: [number, number, number];
    e2: number;
    e3: number;
    physical: boolean;
  };
  bloch: { u: VectorBlock; v: VectorBlock; w: VectorBlock };
  meta: { tolerance: number; artifact_version: string };
}

export interface RegionCell {
  s: number;
  t: number;
  lhs1: number;
  lhs2: number;
  physical: boolean;
  u_squares: [number, number, number];
  v_squares: [number, number, number];
  w_squares: [number, number, number];
}

export interface RegionGridDoc {
  schema_version: number;
  cluster: string;
  sub_case: string;
  step: number;
  fixed: Record<string, number>;
  s_values: number[];
  t_values: number[];
  cells: RegionCell[];
}

export interface SubCase {
  name: string;
  slots: ParamName[];
}

export interface CatalogDoc {
  schema_version: number;
  clusters: { cluster_id: string; arity: number; sub_cases: SubCase[] }[];
}

export interface ScanRequest {
  cluster: string;
  sub?: string;
  min: number;
  max: number;
  step: number;
  fix?: Record<string, number>;
}

export function zeroParams(): Params {
  return { x: 0, y: 0, a: 0, b: 0, alpha1: 0, beta1: 0, alpha2: 0, beta2: 0 };
}
