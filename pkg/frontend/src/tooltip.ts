/** Tooltip text for simplex probabilities.
 *
 * The UI performs no probability arithmetic: both the decimal and the exact
 * fraction come straight from the API's {num, den, value} entry, with `den`
 * left unreduced (k^2 for edges, k^3 for faces).
 */

import type { ProbEntry } from "./types.js";

/** Decimal with up to 3 significant fractional digits, no trailing zeros. */
export function formatDecimal(value: number): string {
  if (value === 0) return "0";
  if (value === 1) return "1";
  // keep three significant digits of the fractional part
  const digits = Math.max(3, 2 - Math.floor(Math.log10(value)));
  return value
    .toFixed(Math.min(digits, 12))
    .replace(/0+$/, "")
    .replace(/\.$/, "");
}

/** Compact tooltip: the decimal alone, e.g. "0.875". */
export function formatProbability(entry: ProbEntry): string {
  return formatDecimal(entry.value);
}

/** Expanded tooltip: decimal plus the exact fraction, e.g. "0.875 (7/8)". */
export function formatProbabilityExpanded(entry: ProbEntry): string {
  return `${formatDecimal(entry.value)} (${entry.num}/${entry.den})`;
}
