import { aggregateKeywords, type KeywordSummary } from "./keywords";
import type { LayoutEntry, Paper } from "./types";

/** Pan/zoom view over the normalized [0,1]^2 layout space. */
export interface View {
  scale: number; // canvas pixels per unit of layout space (before zoom)
  zoom: number;
  offsetX: number; // pixels
  offsetY: number;
}

export interface Rect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export const HIT_RADIUS_PX = 8;
const MARGIN = 20;

export function defaultView(width: number, height: number): View {
  return {
    scale: Math.min(width, height) - 2 * MARGIN,
    zoom: 1,
    offsetX: MARGIN,
    offsetY: MARGIN,
  };
}

/** Affine map from normalized layout coordinates to canvas pixels. */
export function toCanvas(view: View, x: number, y: number): [number, number] {
  return [
    x * view.scale * view.zoom + view.offsetX,
    y * view.scale * view.zoom + view.offsetY,
  ];
}

export function fromCanvas(view: View, px: number, py: number): [number, number] {
  return [
    (px - view.offsetX) / (view.scale * view.zoom),
    (py - view.offsetY) / (view.scale * view.zoom),
  ];
}

/** Nearest dot within the hit radius, or null for empty canvas regions. */
export function hitTest(
  layout: LayoutEntry[],
  view: View,
  px: number,
  py: number,
): string | null {
  let best: string | null = null;
  let bestDist = HIT_RADIUS_PX;
  for (const entry of layout) {
    const [ex, ey] = toCanvas(view, entry.x, entry.y);
    const dist = Math.hypot(ex - px, ey - py);
    if (dist <= bestDist) {
      best = entry.uid;
      bestDist = dist;
    }
  }
  return best;
}

/** Normalize a drag rectangle so extents are non-negative. */
export function normalizeRect(rect: Rect): Rect {
  return {
    x0: Math.min(rect.x0, rect.x1),
    y0: Math.min(rect.y0, rect.y1),
    x1: Math.max(rect.x0, rect.x1),
    y1: Math.max(rect.y0, rect.y1),
  };
}

/**
 * Papers whose layout coordinates fall inside the rectangle, bounds
 * inclusive. The rect lives in normalized layout space, so pan/zoom of
 * the view never changes the outcome.
 */
export function selectInRect(layout: LayoutEntry[], rect: Rect): Set<string> {
  const r = normalizeRect(rect);
  const selected = new Set<string>();
  for (const entry of layout) {
    if (
      entry.x >= r.x0 &&
      entry.x <= r.x1 &&
      entry.y >= r.y0 &&
      entry.y <= r.y1
    ) {
      selected.add(entry.uid);
    }
  }
  return selected;
}

/** Keyword panel contents for a selection; empty selection gives []. */
export function selectionSummary(
  papers: Paper[],
  selected: Set<string>,
  topK = 15,
): KeywordSummary {
  return aggregateKeywords(
    papers.filter((p) => selected.has(p.uid)),
    topK,
  );
}

export interface MapState {
  highlight: Set<string>;
  selection: Rect | null;
  hovered: string | null;
}

const BASE_COLOR = "#7a7a7a";
const HIGHLIGHT_COLOR = "#d02020";
const DOT_RADIUS = 4;

/** Draw the dots; highlighted dots in red on top, hovered dot enlarged. */
export function drawMap(
  ctx: CanvasRenderingContext2D,
  layout: LayoutEntry[],
  view: View,
  state: MapState,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  const passes: [boolean, string][] = [
    [false, BASE_COLOR],
    [true, HIGHLIGHT_COLOR],
  ];
  for (const [highlighted, color] of passes) {
    ctx.fillStyle = color;
    for (const entry of layout) {
      if (state.highlight.has(entry.uid) !== highlighted) {
        continue;
      }
      const [px, py] = toCanvas(view, entry.x, entry.y);
      const radius = entry.uid === state.hovered ? DOT_RADIUS * 1.8 : DOT_RADIUS;
      ctx.beginPath();
      ctx.arc(px, py, radius, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
  if (state.selection !== null) {
    const r = normalizeRect(state.selection);
    const [x0, y0] = toCanvas(view, r.x0, r.y0);
    const [x1, y1] = toCanvas(view, r.x1, r.y1);
    ctx.strokeStyle = HIGHLIGHT_COLOR;
    ctx.setLineDash([4, 3]);
    ctx.strokeRect(x0, y0, x1 - x0, y1 - y0);
    ctx.setLineDash([]);
  }
}
