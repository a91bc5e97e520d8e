/** Hit testing in domain coordinates.
 *
 * Faces render beneath edges beneath nodes, so hit-testing runs in the
 * reverse order (nodes, then edges, then faces) to keep small targets
 * clickable. Within each class the closest/smallest candidate wins.
 */

import type { ComplexDoc, Vec2 } from "./types.js";
import type { Pt } from "./transform.js";

export type Hit =
  | { type: "node"; id: number }
  | { type: "edge"; nodes: [number, number]; index: number }
  | { type: "face"; nodes: [number, number, number]; index: number };

export function distToSegment(p: Pt, a: Pt, b: Pt): number {
  const vx = b.x - a.x;
  const vy = b.y - a.y;
  const lengthSq = vx * vx + vy * vy;
  let t = 0;
  if (lengthSq > 0) {
    t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / lengthSq;
    t = Math.max(0, Math.min(1, t));
  }
  const cx = a.x + t * vx;
  const cy = a.y + t * vy;
  return Math.hypot(p.x - cx, p.y - cy);
}

export function pointInTriangle(p: Pt, a: Pt, b: Pt, c: Pt): boolean {
  const sign = (p1: Pt, p2: Pt, p3: Pt) =>
    (p1.x - p3.x) * (p2.y - p3.y) - (p2.x - p3.x) * (p1.y - p3.y);
  const d1 = sign(p, a, b);
  const d2 = sign(p, b, c);
  const d3 = sign(p, c, a);
  const hasNeg = d1 < 0 || d2 < 0 || d3 < 0;
  const hasPos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(hasNeg && hasPos); // boundary counts as inside
}

function triangleArea(a: Pt, b: Pt, c: Pt): number {
  return Math.abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2;
}

export function hitTest(
  point: Pt,
  complex: ComplexDoc,
  anchors: Map<number, Vec2>,
  nodeRadius: number,
  edgeTolerance: number,
): Hit | null {
  const at = (id: number): Pt => {
    const a = anchors.get(id);
    if (!a) throw new Error(`complex references unknown node ${id}`);
    return { x: a[0], y: a[1] };
  };

  let bestNode: { id: number; d: number } | null = null;
  for (const id of complex.vertices) {
    const d = Math.hypot(point.x - at(id).x, point.y - at(id).y);
    if (d <= nodeRadius && (!bestNode || d < bestNode.d)) bestNode = { id, d };
  }
  if (bestNode) return { type: "node", id: bestNode.id };

  let bestEdge: { index: number; d: number } | null = null;
  complex.edges.forEach((edge, index) => {
    const d = distToSegment(point, at(edge.nodes[0]), at(edge.nodes[1]));
    if (d <= edgeTolerance && (!bestEdge || d < bestEdge.d)) bestEdge = { index, d };
  });
  if (bestEdge !== null) {
    const { index } = bestEdge as { index: number; d: number };
    return { type: "edge", nodes: complex.edges[index].nodes, index };
  }

  // topmost-smallest face wins when faces overlap
  let bestFace: { index: number; area: number } | null = null;
  complex.faces.forEach((face, index) => {
    const [a, b, c] = face.nodes;
    if (pointInTriangle(point, at(a), at(b), at(c))) {
      const area = triangleArea(at(a), at(b), at(c));
      if (!bestFace || area < bestFace.area) bestFace = { index, area };
    }
  });
  if (bestFace !== null) {
    const { index } = bestFace as { index: number; area: number };
    return { type: "face", nodes: complex.faces[index].nodes, index };
  }
  return null;
}
