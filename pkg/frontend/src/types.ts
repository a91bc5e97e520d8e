/** JSON documents exchanged with the coverage service. */

export type Vec2 = [number, number];

export interface DomainDoc {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface NodeDoc {
  id: number;
  anchor: Vec2;
  locations: Vec2[];
}

export interface NetworkDoc {
  version: string;
  domain: DomainDoc;
  rc: number;
  rcMax: number;
  eps: number;
  k: number;
  seed: number;
  nodes: NodeDoc[];
}

/** Exact probability: an integer count `num` over `den` = k^2 (edges) or k^3 (faces). */
export interface ProbEntry {
  num: number;
  den: number;
  value: number;
}

export interface EdgeDoc extends ProbEntry {
  nodes: [number, number];
}

export interface FaceDoc extends ProbEntry {
  nodes: [number, number, number];
}

export type ComplexKind = "rips" | "cech";

export interface ComplexDoc {
  kind: ComplexKind;
  k: number;
  vertices: number[];
  edges: EdgeDoc[];
  faces: FaceDoc[];
}

export interface CoverageDoc {
  samples: number;
  fullCoverProb: number;
  meanCoveredFraction: number;
  seed: number;
  method: "exact" | "sampled";
}

export interface ApiErrorDoc {
  error: string;
  field?: string;
}
