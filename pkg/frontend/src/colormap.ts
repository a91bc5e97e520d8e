/** Discretized sequential colormaps for edge and face probabilities.
 *
 * Binning is a pure function of (probability, bin count): probabilities in
 * (0, 1] are split into `bins` equal intervals, right-inclusive, and each bin
 * maps to a color sampled from the scheme's anchor stops. Probability 0 is
 * special-cased (potential-only simplices) and never shares a color with a
 * positive bin.
 */

export interface Colormap {
  name: string;
  /** Anchor colors from low to high probability, as [r, g, b] in 0..255. */
  stops: [number, number, number][];
}

export const EDGE_COLORMAPS: Colormap[] = [
  { name: "blues", stops: [[222, 235, 247], [107, 174, 214], [8, 48, 107]] },
  { name: "greens", stops: [[229, 245, 224], [116, 196, 118], [0, 68, 27]] },
  { name: "oranges", stops: [[254, 230, 206], [253, 141, 60], [127, 39, 4]] },
  { name: "purples", stops: [[239, 237, 245], [158, 154, 200], [63, 0, 125]] },
  { name: "greys", stops: [[240, 240, 240], [150, 150, 150], [0, 0, 0]] },
];

export const FACE_COLORMAPS: Colormap[] = [
  { name: "viridis", stops: [[68, 1, 84], [33, 145, 140], [253, 231, 37]] },
  { name: "magma", stops: [[0, 0, 4], [183, 55, 121], [252, 253, 191]] },
  { name: "plasma", stops: [[13, 8, 135], [204, 71, 120], [240, 249, 33]] },
  { name: "reds", stops: [[254, 224, 210], [251, 106, 74], [103, 0, 13]] },
  { name: "teals", stops: [[209, 238, 234], [70, 170, 168], [3, 78, 83]] },
  { name: "sunset", stops: [[252, 222, 156], [227, 79, 111], [92, 26, 109]] },
  { name: "copper", stops: [[255, 236, 217], [198, 121, 70], [77, 38, 0]] },
];

/** Color used for probability-0 simplices in the potential layer. */
export const ZERO_PROBABILITY_COLOR = "rgba(160,160,160,0.35)";

export const DEFAULT_BIN_COUNT = 5;

/** Bin index in [0, bins) for a probability in (0, 1]; -1 for probability 0. */
export function binIndex(probability: number, bins: number): number {
  if (bins < 1 || !Number.isInteger(bins)) {
    throw new RangeError(`bins must be a positive integer, got ${bins}`);
  }
  if (probability < 0 || probability > 1) {
    throw new RangeError(`probability out of [0,1]: ${probability}`);
  }
  if (probability === 0) return -1;
  // right-inclusive intervals ((i)/bins, (i+1)/bins]; probability 1 lands in the top bin
  return Math.min(bins - 1, Math.ceil(probability * bins) - 1);
}

function lerp(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

/** Sample a scheme's piecewise-linear gradient at t in [0, 1]. */
export function sampleStops(stops: [number, number, number][], t: number): [number, number, number] {
  if (stops.length === 1) return stops[0];
  const scaled = t * (stops.length - 1);
  const i = Math.min(stops.length - 2, Math.floor(scaled));
  const frac = scaled - i;
  const [r1, g1, b1] = stops[i];
  const [r2, g2, b2] = stops[i + 1];
  return [
    Math.round(lerp(r1, r2, frac)),
    Math.round(lerp(g1, g2, frac)),
    Math.round(lerp(b1, b2, frac)),
  ];
}

/** CSS color for a probability under a scheme with `bins` discrete levels. */
export function colorFor(probability: number, map: Colormap, bins: number): string {
  const bin = binIndex(probability, bins);
  if (bin < 0) return ZERO_PROBABILITY_COLOR;
  const t = bins === 1 ? 1 : bin / (bins - 1);
  const [r, g, b] = sampleStops(map.stops, t);
  return `rgb(${r},${g},${b})`;
}
