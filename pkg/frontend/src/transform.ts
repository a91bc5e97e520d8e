/** Invertible zoom/pan between domain (world) and canvas (screen) coordinates.
 *
 * View changes are pure client state: they never touch the API.
 */

export interface ViewTransform {
  /** Pixels per domain unit; always > 0. */
  scale: number;
  /** Screen position of the domain origin. */
  tx: number;
  ty: number;
}

export interface Pt {
  x: number;
  y: number;
}

export function identityTransform(): ViewTransform {
  return { scale: 1, tx: 0, ty: 0 };
}

export function worldToScreen(t: ViewTransform, p: Pt): Pt {
  return { x: p.x * t.scale + t.tx, y: p.y * t.scale + t.ty };
}

export function screenToWorld(t: ViewTransform, p: Pt): Pt {
  return { x: (p.x - t.tx) / t.scale, y: (p.y - t.ty) / t.scale };
}

/** Scale by `factor` about a fixed screen point (the cursor). */
export function zoomAt(t: ViewTransform, screenPt: Pt, factor: number): ViewTransform {
  const scale = t.scale * factor;
  if (!(scale > 0) || !Number.isFinite(scale)) {
    throw new RangeError(`zoom would produce invalid scale ${scale}`);
  }
  // the world point under the cursor must stay under the cursor
  return {
    scale,
    tx: screenPt.x - (screenPt.x - t.tx) * factor,
    ty: screenPt.y - (screenPt.y - t.ty) * factor,
  };
}

export function pan(t: ViewTransform, dxScreen: number, dyScreen: number): ViewTransform {
  return { scale: t.scale, tx: t.tx + dxScreen, ty: t.ty + dyScreen };
}

/** Transform that fits a domain rectangle into a canvas with a margin. */
export function fitDomain(
  domain: { x: number; y: number; width: number; height: number },
  canvasWidth: number,
  canvasHeight: number,
  margin = 20,
): ViewTransform {
  const usableW = Math.max(canvasWidth - 2 * margin, 1);
  const usableH = Math.max(canvasHeight - 2 * margin, 1);
  const scale = Math.min(
    usableW / Math.max(domain.width, 1e-9),
    usableH / Math.max(domain.height, 1e-9),
  );
  return {
    scale,
    tx: margin + (usableW - domain.width * scale) / 2 - domain.x * scale,
    ty: margin + (usableH - domain.height * scale) / 2 - domain.y * scale,
  };
}
