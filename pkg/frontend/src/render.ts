/** Canvas scene renderer: faces beneath edges beneath nodes.
 *
 * Depends only on the subset of CanvasRenderingContext2D declared in Draw2D,
 * so tests can drive it with a recording stub.
 */

import { colorFor, EDGE_COLORMAPS, FACE_COLORMAPS, ZERO_PROBABILITY_COLOR } from "./colormap.js";
import type { ViewState } from "./state.js";
import { neighborsOf } from "./state.js";
import { worldToScreen, type Pt } from "./transform.js";
import type { ComplexDoc, NetworkDoc, Vec2 } from "./types.js";

export interface Draw2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  globalAlpha: number;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  closePath(): void;
  fill(): void;
  stroke(): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  setLineDash(segments: number[]): void;
}

export const SELECT_COLOR = "#d62728"; // selected/hovered simplices: red
export const NEIGHBOR_COLOR = "#1f77b4"; // neighbors of the selection: blue
export const NODE_COLOR = "#222222";
export const POTENTIAL_NODE_COLOR = "#d62728";
export const NODE_SCREEN_RADIUS = 5;

function anchorMap(network: NetworkDoc): Map<number, Vec2> {
  return new Map(network.nodes.map((n) => [n.id, n.anchor]));
}

function circle(ctx: Draw2D, p: Pt, r: number): void {
  ctx.beginPath();
  ctx.arc(p.x, p.y, r, 0, 2 * Math.PI);
}

export function renderScene(
  ctx: Draw2D,
  width: number,
  height: number,
  network: NetworkDoc,
  complex: ComplexDoc | null,
  view: ViewState,
): void {
  ctx.clearRect(0, 0, width, height);
  ctx.globalAlpha = 1;
  ctx.setLineDash([]);

  // domain border is always drawn, even on an empty network
  const t = view.transform;
  const topLeft = worldToScreen(t, { x: network.domain.x, y: network.domain.y });
  ctx.strokeStyle = "#888888";
  ctx.lineWidth = 1;
  ctx.strokeRect(topLeft.x, topLeft.y, network.domain.width * t.scale, network.domain.height * t.scale);

  const anchors = anchorMap(network);
  const at = (id: number): Pt => {
    const a = anchors.get(id);
    if (!a) throw new Error(`complex references unknown node ${id}`);
    return worldToScreen(t, { x: a[0], y: a[1] });
  };
  const neighbors =
    view.selectedNode !== null && complex ? neighborsOf(view.selectedNode, complex) : new Set<number>();
  const hovered = view.hovered;

  if (complex && view.layers.faces) {
    const map = FACE_COLORMAPS[view.faceColormap];
    for (const face of complex.faces) {
      if (face.value === 0) continue;
      const [a, b, c] = face.nodes.map(at);
      const isHovered =
        hovered?.type === "face" &&
        hovered.nodes[0] === face.nodes[0] &&
        hovered.nodes[1] === face.nodes[1] &&
        hovered.nodes[2] === face.nodes[2];
      ctx.beginPath();
      ctx.moveTo(a.x, a.y);
      ctx.lineTo(b.x, b.y);
      ctx.lineTo(c.x, c.y);
      ctx.closePath();
      ctx.globalAlpha = 0.6;
      ctx.fillStyle = isHovered ? SELECT_COLOR : colorFor(face.value, map, view.bins);
      ctx.fill();
      ctx.globalAlpha = 1;
    }
  }

  if (complex && view.layers.potentialEdges) {
    // thinner and desaturated so they never dominate true edges
    ctx.strokeStyle = ZERO_PROBABILITY_COLOR;
    ctx.lineWidth = 0.5;
    ctx.setLineDash([3, 3]);
    for (const node of network.nodes) {
      for (const other of network.nodes) {
        if (other.id <= node.id) continue;
        for (const u of node.locations) {
          for (const v of other.locations) {
            const su = worldToScreen(t, { x: u[0], y: u[1] });
            const sv = worldToScreen(t, { x: v[0], y: v[1] });
            ctx.beginPath();
            ctx.moveTo(su.x, su.y);
            ctx.lineTo(sv.x, sv.y);
            ctx.stroke();
          }
        }
      }
    }
    ctx.setLineDash([]);
  }

  if (complex && view.layers.edges) {
    const map = EDGE_COLORMAPS[view.edgeColormap];
    for (const edge of complex.edges) {
      if (edge.value === 0) continue;
      const a = at(edge.nodes[0]);
      const b = at(edge.nodes[1]);
      const isHovered =
        hovered?.type === "edge" &&
        hovered.nodes[0] === edge.nodes[0] &&
        hovered.nodes[1] === edge.nodes[1];
      const touchesSelection =
        view.selectedNode !== null &&
        (edge.nodes[0] === view.selectedNode || edge.nodes[1] === view.selectedNode);
      ctx.strokeStyle =
        isHovered || touchesSelection ? SELECT_COLOR : colorFor(edge.value, map, view.bins);
      ctx.lineWidth = isHovered ? 3 : 2;
      ctx.beginPath();
      ctx.moveTo(a.x, a.y);
      ctx.lineTo(b.x, b.y);
      ctx.stroke();
    }
  }

  if (view.layers.nodeCoverage) {
    // inner circle: coverage radius rc; outer circle: rc + eps
    for (const node of network.nodes) {
      const p = worldToScreen(t, { x: node.anchor[0], y: node.anchor[1] });
      ctx.strokeStyle = "#2ca02c";
      ctx.lineWidth = 1;
      circle(ctx, p, network.rc * t.scale);
      ctx.stroke();
      ctx.setLineDash([4, 4]);
      circle(ctx, p, (network.rc + network.eps) * t.scale);
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }

  if (view.layers.potentialNodes) {
    ctx.fillStyle = POTENTIAL_NODE_COLOR;
    for (const node of network.nodes) {
      for (const loc of node.locations) {
        const p = worldToScreen(t, { x: loc[0], y: loc[1] });
        circle(ctx, p, 2);
        ctx.fill();
      }
    }
  }

  if (view.layers.nodes) {
    for (const node of network.nodes) {
      const p = worldToScreen(t, { x: node.anchor[0], y: node.anchor[1] });
      // eps-disk of uncertainty
      ctx.strokeStyle = "#bbbbbb";
      ctx.lineWidth = 1;
      circle(ctx, p, network.eps * t.scale);
      ctx.stroke();
      const isSelected = view.selectedNode === node.id;
      const isNeighbor = neighbors.has(node.id);
      const isHovered = hovered?.type === "node" && hovered.id === node.id;
      ctx.fillStyle =
        isSelected || isHovered ? SELECT_COLOR : isNeighbor ? NEIGHBOR_COLOR : NODE_COLOR;
      circle(ctx, p, NODE_SCREEN_RADIUS);
      ctx.fill();
    }
  }
}
