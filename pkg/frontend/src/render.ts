import type { QuiverData } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface RenderOptions {
  width: number;
  height: number;
  nodeRadius: number;
}

export const defaultOptions: RenderOptions = {
  width: 420,
  height: 420,
  nodeRadius: 18,
};

/** Vertex positions on a circle, vertex 1 at the top, clockwise. */
export function circleLayout(n: number, opts: RenderOptions = defaultOptions): Point[] {
  const cx = opts.width / 2;
  const cy = opts.height / 2;
  const r = Math.min(opts.width, opts.height) / 2 - 2.5 * opts.nodeRadius;
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / n;
    points.push({
      x: Math.round(100 * (cx + r * Math.cos(angle))) / 100,
      y: Math.round(100 * (cy + r * Math.sin(angle))) / 100,
    });
  }
  return points;
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// Arrows start and end on node borders, not centers, so the arrowhead
// marker stays visible. Multiplicities above 1 get a midpoint label.
function arrowLine(from: Point, to: Point, mult: number, radius: number): string {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const pad = radius + 4;
  const x1 = from.x + (dx / len) * pad;
  const y1 = from.y + (dy / len) * pad;
  const x2 = to.x - (dx / len) * pad;
  const y2 = to.y - (dy / len) * pad;
  let svg = `<line class="arrow" x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" y2="${y2.toFixed(2)}" marker-end="url(#tip)"/>`;
  if (mult > 1) {
    const mx = ((x1 + x2) / 2 + 8).toFixed(2);
    const my = ((y1 + y2) / 2 - 8).toFixed(2);
    svg += `<text class="mult" x="${mx}" y="${my}">${mult}</text>`;
  }
  return svg;
}

/**
 * The whole quiver as an SVG string. Every vertex circle carries a
 * data-vertex attribute with its 1-based index so the page can attach
 * one click handler on the surrounding element.
 */
export function quiverSvg(quiver: QuiverData, opts: RenderOptions = defaultOptions): string {
  const points = circleLayout(quiver.n, opts);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${opts.width} ${opts.height}" width="${opts.width}" height="${opts.height}">`,
  );
  parts.push(
    `<defs><marker id="tip" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>`,
  );
  for (const [source, target, mult] of quiver.arrows) {
    const from = points[source - 1];
    const to = points[target - 1];
    if (!from || !to) {
      throw new Error(`arrow ${source}->${target} leaves the vertex range 1..${quiver.n}`);
    }
    parts.push(arrowLine(from, to, mult, opts.nodeRadius));
  }
  points.forEach((p, i) => {
    const label = escapeXml(`${i + 1}`);
    parts.push(
      `<g class="vertex" data-vertex="${i + 1}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="${opts.nodeRadius}"/>` +
        `<text x="${p.x}" y="${p.y}" text-anchor="middle" dominant-baseline="central">${label}</text>` +
        `</g>`,
    );
  });
  parts.push(`</svg>`);
  return parts.join("");
}
