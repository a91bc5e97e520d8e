import { describe, expect, it } from "vitest";

import { distToSegment, hitTest, pointInTriangle } from "../src/hit.js";
import type { ComplexDoc, Vec2 } from "../src/types.js";

const entry = { num: 1, den: 4, value: 0.25 };

function complexOf(): ComplexDoc {
  // triangle 0-1-2 with all edges, plus a pendant edge 2-3
  return {
    kind: "rips",
    k: 2,
    vertices: [0, 1, 2, 3],
    edges: [
      { nodes: [0, 1], ...entry },
      { nodes: [0, 2], ...entry },
      { nodes: [1, 2], ...entry },
      { nodes: [2, 3], ...entry },
    ],
    faces: [{ nodes: [0, 1, 2], ...entry }],
  };
}

const anchors = new Map<number, Vec2>([
  [0, [0, 0]],
  [1, [10, 0]],
  [2, [5, 8]],
  [3, [20, 8]],
]);

describe("geometry primitives", () => {
  it("distToSegment clamps to endpoints", () => {
    expect(distToSegment({ x: -3, y: 4 }, { x: 0, y: 0 }, { x: 10, y: 0 })).toBeCloseTo(5);
    expect(distToSegment({ x: 5, y: 2 }, { x: 0, y: 0 }, { x: 10, y: 0 })).toBeCloseTo(2);
  });

  it("pointInTriangle includes the boundary", () => {
    const [a, b, c] = [
      { x: 0, y: 0 },
      { x: 10, y: 0 },
      { x: 5, y: 8 },
    ];
    expect(pointInTriangle({ x: 5, y: 3 }, a, b, c)).toBe(true);
    expect(pointInTriangle({ x: 5, y: 0 }, a, b, c)).toBe(true); // on edge
    expect(pointInTriangle({ x: 5, y: -1 }, a, b, c)).toBe(false);
  });
});

describe("hitTest order: nodes, then edges, then faces", () => {
  const complex = complexOf();

  it("a node wins even when it sits on an edge and inside a face", () => {
    const hit = hitTest({ x: 0.5, y: 0.2 }, complex, anchors, 1.0, 1.0);
    expect(hit).toEqual({ type: "node", id: 0 });
  });

  it("an edge wins over the face it borders", () => {
    const hit = hitTest({ x: 5, y: 0.3 }, complex, anchors, 1.0, 1.0);
    expect(hit).toMatchObject({ type: "edge", nodes: [0, 1] });
  });

  it("a face is reported when nothing smaller is hit", () => {
    const hit = hitTest({ x: 5, y: 3 }, complex, anchors, 1.0, 1.0);
    expect(hit).toMatchObject({ type: "face", nodes: [0, 1, 2] });
  });

  it("empty space gives no hit", () => {
    expect(hitTest({ x: 50, y: 50 }, complex, anchors, 1.0, 1.0)).toBeNull();
  });

  it("the closest of several candidate edges wins", () => {
    const hit = hitTest({ x: 12, y: 7.5 }, complex, anchors, 0.5, 5.0);
    expect(hit).toMatchObject({ type: "edge", nodes: [2, 3] });
  });
});
