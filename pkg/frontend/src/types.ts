// Wire formats of the quiverlab HTTP service. Kept in sync by the
// integration tests, which run against a live server.

/** Arrow as [source, target, multiplicity], vertices 1-based. */
export type ArrowData = [number, number, number];

export interface QuiverData {
  n: number;
  arrows: ArrowData[];
}

/**
 * One Laurent monomial: exponent vector plus a coefficient. The
 * coefficient travels as a decimal string because values can exceed
 * Number.MAX_SAFE_INTEGER; never parse it into a number.
 */
export type TermData = [number[], string];

export type PolyData = TermData[];

export interface SeedData {
  quiver: QuiverData;
  cluster: PolyData[];
  cluster_text: string[];
}

export interface MutationStep {
  k: number;
  text: string;
}

export interface MutateResponse {
  seed: SeedData;
  steps: MutationStep[];
  dynkin_type: string | null;
}

export interface ExploreVertex {
  id: number;
  quiver: QuiverData;
}

export interface ExploreResponse {
  root: number;
  vertices: ExploreVertex[];
  /** Edges as [seed id, seed id, mutated vertex]. */
  edges: [number, number, number][];
  truncated: boolean;
  variables: string[] | null;
}

export interface ClassCensusResponse {
  size: number;
  double_arrows: number;
  max_mult: number;
  truncated: boolean;
}

export interface ClassifyResponse {
  verdict: "finite" | "infinite" | "depth_exhausted";
  type: string | null;
  witness: number[] | null;
  reason: string | null;
  explored: number;
}

export interface CcResponse {
  value: string;
  terms: PolyData;
}

/** A recorded interaction: the starting quiver and the clicks, in order. */
export interface SessionData {
  quiver: QuiverData;
  sequence: number[];
}
