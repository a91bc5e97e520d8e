/** Browser entry: wires the canvas, control panel, tooltip, and session API. */

import { ApiError, SessionClient } from "./api.js";
import { buildControlPanel } from "./controls.js";
import { hitTest, type Hit } from "./hit.js";
import { NODE_SCREEN_RADIUS, renderScene } from "./render.js";
import {
  initialViewState,
  selectNode,
  setHovered,
  setKind,
  toggleLayer,
  type ViewState,
} from "./state.js";
import { formatProbabilityExpanded } from "./tooltip.js";
import { fitDomain, pan, screenToWorld, zoomAt } from "./transform.js";
import type { ComplexDoc, NetworkDoc } from "./types.js";

const DRAG_PREVIEW_INTERVAL_MS = 80;

async function start(): Promise<void> {
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d")!;
  const tooltip = document.getElementById("tooltip")!;
  const toast = document.getElementById("toast")!;

  const client = await SessionClient.create();
  let network = await client.getNetwork();
  let view: ViewState = initialViewState();
  view = { ...view, transform: fitDomain(network.domain, canvas.width, canvas.height) };
  let complex: ComplexDoc | null = null;
  let addNodeArmed = false;

  const showToast = (message: string) => {
    toast.textContent = message;
    toast.classList.add("visible");
    setTimeout(() => toast.classList.remove("visible"), 3000);
  };

  const draw = () => renderScene(ctx, canvas.width, canvas.height, network, complex, view);

  const refreshComplex = async () => {
    complex = await client.getComplex(view.kind);
    draw();
  };

  /** Re-sync the whole view from the server after any failed mutation. */
  const resync = async (error: unknown) => {
    showToast(error instanceof ApiError ? error.message : String(error));
    network = await client.getNetwork();
    await refreshComplex();
    panel.sync(network);
  };

  const applyNetwork = async (doc: NetworkDoc) => {
    network = doc;
    panel.sync(network);
    await refreshComplex();
  };

  const mutate = async (action: () => Promise<NetworkDoc>) => {
    try {
      await applyNetwork(await action());
    } catch (error) {
      await resync(error);
    }
  };

  const panel = buildControlPanel({
    setRc: (rc) => void mutate(() => client.setParams({ rc })),
    setEps: (eps) => void mutate(() => client.setParams({ eps })),
    setK: (k) => void mutate(() => client.setParams({ k })),
    randomNetwork: (n, seed) =>
      void mutate(() =>
        client.randomNetwork({ n, k: network.k, rc: network.rc, eps: network.eps, seed }),
      ),
    regenerate: () => void mutate(() => client.setParams({ seed: network.seed })),
    recomputeRcMax: () => {
      // half the largest x-axis separation between anchors
      const xs = network.nodes.map((n) => n.anchor[0]);
      if (xs.length >= 2) {
        const rcMax = (Math.max(...xs) - Math.min(...xs)) / 2;
        void mutate(async () => {
          const doc = await client.getNetwork();
          doc.rcMax = Math.max(rcMax, doc.rc);
          return client.putNetwork(doc);
        });
      }
    },
    addNodeMode: () => {
      addNodeArmed = true;
      canvas.style.cursor = "crosshair";
    },
    saveJson: () => {
      const blob = new Blob([JSON.stringify(network, null, 2)], { type: "application/json" });
      const a = document.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = "network.json";
      a.click();
      URL.revokeObjectURL(a.href);
    },
    openJson: (text) => {
      try {
        const doc = JSON.parse(text) as NetworkDoc;
        void mutate(() => client.putNetwork(doc));
      } catch {
        showToast("not a valid JSON document");
      }
    },
    importCsv: (text) => {
      void mutate(async () => {
        const response = await fetch(
          `${client.baseUrl}/api/session/${client.sessionId}/network/csv`,
          { method: "PUT", headers: { "content-type": "text/csv" }, body: text },
        );
        if (!response.ok) {
          const body = (await response.json()) as { error?: string };
          throw new ApiError(response.status, body.error ?? response.statusText);
        }
        return (await response.json()) as NetworkDoc;
      });
    },
    setKind: (kind) => {
      view = setKind(view, kind);
      void refreshComplex();
    },
    setEdgeColormap: (index) => {
      view = { ...view, edgeColormap: index };
      draw();
    },
    setFaceColormap: (index) => {
      view = { ...view, faceColormap: index };
      draw();
    },
    setBins: (bins) => {
      view = { ...view, bins };
      draw();
    },
    toggleLayer: (layer) => {
      view = toggleLayer(view, layer);
      draw();
    },
  });
  document.getElementById("panel")!.appendChild(panel.root);
  panel.sync(network);

  // --- pointer interaction ------------------------------------------------

  let drag: { nodeId: number; startX: number; startY: number; lastPreview: number } | null = null;
  let panning: { startX: number; startY: number } | null = null;

  const canvasPoint = (event: MouseEvent) => {
    const rect = canvas.getBoundingClientRect();
    return { x: event.clientX - rect.left, y: event.clientY - rect.top };
  };

  const hitAt = (event: MouseEvent): Hit | null => {
    if (!complex) return null;
    const world = screenToWorld(view.transform, canvasPoint(event));
    const anchors = new Map(network.nodes.map((n) => [n.id, n.anchor]));
    const tolerance = 6 / view.transform.scale; // ~6px in domain units
    return hitTest(world, complex, anchors, NODE_SCREEN_RADIUS / view.transform.scale, tolerance);
  };

  canvas.addEventListener("pointerdown", (event) => {
    const p = canvasPoint(event);
    if (addNodeArmed) {
      addNodeArmed = false;
      canvas.style.cursor = "default";
      const world = screenToWorld(view.transform, p);
      void mutate(() => client.addNode(world.x, world.y));
      return;
    }
    const hit = hitAt(event);
    if (hit?.type === "node") {
      drag = { nodeId: hit.id, startX: p.x, startY: p.y, lastPreview: 0 };
      view = selectNode(view, hit.id);
      draw();
    } else {
      panning = { startX: p.x, startY: p.y };
    }
  });

  canvas.addEventListener("pointermove", (event) => {
    const p = canvasPoint(event);
    if (drag) {
      // throttled live preview; the move is committed on release
      const now = performance.now();
      if (now - drag.lastPreview >= DRAG_PREVIEW_INTERVAL_MS) {
        drag.lastPreview = now;
        const dx = (p.x - drag.startX) / view.transform.scale;
        const dy = (p.y - drag.startY) / view.transform.scale;
        const node = network.nodes.find((n) => n.id === drag!.nodeId);
        if (node) {
          const preview: NetworkDoc = {
            ...network,
            nodes: network.nodes.map((n) =>
              n.id === drag!.nodeId
                ? {
                    ...n,
                    anchor: [n.anchor[0] + dx, n.anchor[1] + dy],
                    locations: n.locations.map(([x, y]) => [x + dx, y + dy]),
                  }
                : n,
            ),
          };
          renderScene(ctx, canvas.width, canvas.height, preview, complex, view);
        }
      }
      return;
    }
    if (panning) {
      view = { ...view, transform: pan(view.transform, p.x - panning.startX, p.y - panning.startY) };
      panning = { startX: p.x, startY: p.y };
      draw();
      return;
    }
    const hit = hitAt(event);
    if (complex) view = setHovered(view, hit, complex);
    if (hit && complex && (hit.type === "edge" || hit.type === "face")) {
      const entry = hit.type === "edge" ? complex.edges[hit.index] : complex.faces[hit.index];
      tooltip.textContent = formatProbabilityExpanded(entry);
      tooltip.style.left = `${event.clientX + 12}px`;
      tooltip.style.top = `${event.clientY + 12}px`;
      tooltip.classList.add("visible");
    } else {
      tooltip.classList.remove("visible");
    }
    draw();
  });

  canvas.addEventListener("pointerup", (event) => {
    panning = null;
    if (!drag) return;
    const p = canvasPoint(event);
    const dx = (p.x - drag.startX) / view.transform.scale;
    const dy = (p.y - drag.startY) / view.transform.scale;
    const nodeId = drag.nodeId;
    drag = null;
    if (dx !== 0 || dy !== 0) {
      // exactly one committed move per drag; the complex is re-fetched once
      void mutate(() => client.moveNode(nodeId, dx, dy));
    }
  });

  canvas.addEventListener("wheel", (event) => {
    event.preventDefault();
    const factor = event.deltaY < 0 ? 1.15 : 1 / 1.15;
    view = { ...view, transform: zoomAt(view.transform, canvasPoint(event), factor) };
    draw();
  });

  window.addEventListener("keydown", (event) => {
    if (event.key === "Escape") {
      view = selectNode(view, null);
      addNodeArmed = false;
      canvas.style.cursor = "default";
      draw();
    } else if (event.key === "Delete" && view.selectedNode !== null) {
      const nodeId = view.selectedNode;
      view = selectNode(view, null);
      void mutate(() => client.deleteNode(nodeId));
    }
  });

  await refreshComplex();
}

void start();
