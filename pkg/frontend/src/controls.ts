/** Control panel: parameter widgets and action buttons.
 *
 * Widgets only validate locally and forward intents; all mutations go through
 * the session API in main.ts. Invalid text input never reaches the API.
 */

import type { ComplexKind, NetworkDoc } from "./types.js";
import { EDGE_COLORMAPS, FACE_COLORMAPS } from "./colormap.js";
import type { LayerToggles } from "./state.js";

export interface ControlIntents {
  setRc(rc: number): void;
  setEps(eps: number): void;
  setK(k: number): void;
  randomNetwork(n: number, seed: number): void;
  regenerate(): void;
  recomputeRcMax(): void;
  addNodeMode(): void;
  saveJson(): void;
  openJson(text: string): void;
  importCsv(text: string): void;
  setKind(kind: ComplexKind): void;
  setEdgeColormap(index: number): void;
  setFaceColormap(index: number): void;
  setBins(bins: number): void;
  toggleLayer(layer: keyof LayerToggles): void;
}

export interface ControlPanel {
  root: HTMLElement;
  /** Reflect the current network document in the widgets. */
  sync(network: NetworkDoc): void;
}

function labeled(text: string, input: HTMLElement): HTMLLabelElement {
  const label = document.createElement("label");
  label.textContent = text;
  label.appendChild(input);
  return label;
}

interface SliderBox {
  wrap: HTMLElement;
  slider: HTMLInputElement;
  box: HTMLInputElement;
  set(value: number, max?: number): void;
}

/** A slider paired with a text box; commits only on valid numeric input. */
function sliderBox(
  text: string,
  min: number,
  max: number,
  step: number,
  onCommit: (value: number) => void,
): SliderBox {
  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = String(min);
  slider.max = String(max);
  slider.step = String(step);
  const box = document.createElement("input");
  box.type = "text";
  box.size = 6;
  const commit = (raw: string) => {
    const value = Number(raw);
    if (!Number.isFinite(value) || value < Number(slider.min) || value > Number(slider.max)) {
      box.classList.add("invalid"); // inline validation, no API call
      return;
    }
    box.classList.remove("invalid");
    onCommit(value);
  };
  slider.addEventListener("change", () => commit(slider.value));
  box.addEventListener("change", () => commit(box.value));
  const wrap = document.createElement("div");
  wrap.className = "slider-box";
  wrap.appendChild(labeled(text, slider));
  wrap.appendChild(box);
  return {
    wrap,
    slider,
    box,
    set(value: number, newMax?: number) {
      if (newMax !== undefined) slider.max = String(newMax);
      slider.value = String(value);
      box.value = String(value);
      box.classList.remove("invalid");
    },
  };
}

function button(text: string, onClick: () => void): HTMLButtonElement {
  const b = document.createElement("button");
  b.textContent = text;
  b.addEventListener("click", onClick);
  return b;
}

function filePicker(text: string, accept: string, onText: (text: string) => void): HTMLElement {
  const input = document.createElement("input");
  input.type = "file";
  input.accept = accept;
  input.style.display = "none";
  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (file) onText(await file.text());
    input.value = "";
  });
  const b = button(text, () => input.click());
  const wrap = document.createElement("span");
  wrap.appendChild(b);
  wrap.appendChild(input);
  return wrap;
}

export function buildControlPanel(intents: ControlIntents): ControlPanel {
  const root = document.createElement("div");
  root.id = "controls";

  const rc = sliderBox("r_c", 1, 100, 0.5, (v) => intents.setRc(v));
  const eps = sliderBox("eps", 0, 50, 0.5, (v) => intents.setEps(v));
  const k = sliderBox("k", 1, 16, 1, (v) => intents.setK(v));
  const n = sliderBox("n", 0, 200, 1, () => {});
  const seedBox = document.createElement("input");
  seedBox.type = "text";
  seedBox.size = 6;
  seedBox.value = "0";

  root.appendChild(rc.wrap);
  root.appendChild(eps.wrap);
  root.appendChild(k.wrap);
  root.appendChild(n.wrap);
  root.appendChild(labeled("seed", seedBox));

  const actions = document.createElement("div");
  actions.className = "actions";
  actions.appendChild(
    button("random data", () => intents.randomNetwork(Number(n.slider.value), Number(seedBox.value) || 0)),
  );
  actions.appendChild(button("update", () => intents.regenerate()));
  actions.appendChild(button("max", () => intents.recomputeRcMax()));
  actions.appendChild(button("add node", () => intents.addNodeMode()));
  actions.appendChild(button("save JSON", () => intents.saveJson()));
  actions.appendChild(filePicker("open JSON", ".json", (t) => intents.openJson(t)));
  actions.appendChild(filePicker("import CSV", ".csv", (t) => intents.importCsv(t)));
  root.appendChild(actions);

  const kindWrap = document.createElement("div");
  kindWrap.className = "kind-toggle";
  for (const kind of ["cech", "rips"] as ComplexKind[]) {
    const radio = document.createElement("input");
    radio.type = "radio";
    radio.name = "kind";
    radio.value = kind;
    radio.checked = kind === "cech";
    radio.addEventListener("change", () => intents.setKind(kind));
    kindWrap.appendChild(labeled(kind === "cech" ? "Čech" : "Rips", radio));
  }
  root.appendChild(kindWrap);

  const layerWrap = document.createElement("div");
  layerWrap.className = "layers";
  const layerDefaults: [keyof LayerToggles, string, boolean][] = [
    ["nodes", "nodes", true],
    ["potentialNodes", "potential nodes", true],
    ["nodeCoverage", "node coverage", false],
    ["edges", "edges", true],
    ["potentialEdges", "potential edges", false],
    ["faces", "faces", true],
  ];
  for (const [layer, text, checked] of layerDefaults) {
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = checked;
    box.addEventListener("change", () => intents.toggleLayer(layer));
    layerWrap.appendChild(labeled(text, box));
  }
  root.appendChild(layerWrap);

  const colorWrap = document.createElement("div");
  colorWrap.className = "colors";
  const edgeSelect = document.createElement("select");
  EDGE_COLORMAPS.forEach((m, i) => {
    const opt = document.createElement("option");
    opt.value = String(i);
    opt.textContent = m.name;
    edgeSelect.appendChild(opt);
  });
  edgeSelect.addEventListener("change", () => intents.setEdgeColormap(Number(edgeSelect.value)));
  const faceSelect = document.createElement("select");
  FACE_COLORMAPS.forEach((m, i) => {
    const opt = document.createElement("option");
    opt.value = String(i);
    opt.textContent = m.name;
    faceSelect.appendChild(opt);
  });
  faceSelect.addEventListener("change", () => intents.setFaceColormap(Number(faceSelect.value)));
  const binsBox = document.createElement("input");
  binsBox.type = "number";
  binsBox.min = "1";
  binsBox.max = "20";
  binsBox.value = "5";
  binsBox.addEventListener("change", () => {
    const bins = Number(binsBox.value);
    if (Number.isInteger(bins) && bins >= 1 && bins <= 20) intents.setBins(bins);
  });
  colorWrap.appendChild(labeled("edge map", edgeSelect));
  colorWrap.appendChild(labeled("face map", faceSelect));
  colorWrap.appendChild(labeled("bins", binsBox));
  root.appendChild(colorWrap);

  return {
    root,
    sync(network: NetworkDoc) {
      rc.set(network.rc, network.rcMax);
      // eps can never exceed the current rc
      eps.set(network.eps, Math.min(50, network.rc));
      k.set(network.k);
      n.set(network.nodes.length);
      seedBox.value = String(network.seed);
    },
  };
}
