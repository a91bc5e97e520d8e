/** Pure view state and its transitions (no DOM, no network). */

import type { ComplexDoc, ComplexKind } from "./types.js";
import { DEFAULT_BIN_COUNT } from "./colormap.js";
import type { Hit } from "./hit.js";
import { identityTransform, type ViewTransform } from "./transform.js";

export interface LayerToggles {
  nodes: boolean;
  potentialNodes: boolean;
  nodeCoverage: boolean;
  edges: boolean;
  potentialEdges: boolean;
  faces: boolean;
}

export interface ViewState {
  kind: ComplexKind;
  layers: LayerToggles;
  selectedNode: number | null;
  hovered: Hit | null;
  transform: ViewTransform;
  edgeColormap: number; // index into EDGE_COLORMAPS
  faceColormap: number; // index into FACE_COLORMAPS
  bins: number;
}

export function initialViewState(): ViewState {
  return {
    kind: "cech",
    layers: {
      nodes: true,
      potentialNodes: true,
      nodeCoverage: false,
      edges: true,
      potentialEdges: false,
      faces: true,
    },
    selectedNode: null,
    hovered: null,
    transform: identityTransform(),
    edgeColormap: 0,
    faceColormap: 0,
    bins: DEFAULT_BIN_COUNT,
  };
}

export function toggleLayer(state: ViewState, layer: keyof LayerToggles): ViewState {
  return { ...state, layers: { ...state.layers, [layer]: !state.layers[layer] } };
}

export function setKind(state: ViewState, kind: ComplexKind): ViewState {
  // the hovered simplex may not exist in the other complex; drop it
  return { ...state, kind, hovered: null };
}

export function selectNode(state: ViewState, nodeId: number | null): ViewState {
  return { ...state, selectedNode: nodeId };
}

/** Invariant: a hovered simplex must exist in the displayed complex. */
export function setHovered(state: ViewState, hit: Hit | null, complex: ComplexDoc): ViewState {
  if (hit !== null && !hitExists(hit, complex)) {
    throw new Error("hovered simplex not present in the displayed complex");
  }
  return { ...state, hovered: hit };
}

export function hitExists(hit: Hit, complex: ComplexDoc): boolean {
  switch (hit.type) {
    case "node":
      return complex.vertices.includes(hit.id);
    case "edge":
      return complex.edges.some(
        (e) => e.nodes[0] === hit.nodes[0] && e.nodes[1] === hit.nodes[1],
      );
    case "face":
      return complex.faces.some(
        (f) =>
          f.nodes[0] === hit.nodes[0] &&
          f.nodes[1] === hit.nodes[1] &&
          f.nodes[2] === hit.nodes[2],
      );
  }
}

/** Node ids adjacent to `nodeId` through positive-probability edges. */
export function neighborsOf(nodeId: number, complex: ComplexDoc): Set<number> {
  const neighbors = new Set<number>();
  for (const edge of complex.edges) {
    if (edge.value <= 0) continue;
    if (edge.nodes[0] === nodeId) neighbors.add(edge.nodes[1]);
    if (edge.nodes[1] === nodeId) neighbors.add(edge.nodes[0]);
  }
  return neighbors;
}
