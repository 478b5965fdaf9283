/** Vector renderer: one panel to a standalone SVG string. */

import { okRows, seriesPoints, type SweepRow } from "./csv.js";
import type { PanelSpec } from "./panels.js";
import { makeScale, tickLabel } from "./scale.js";

export interface Layout {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export const SVG_LAYOUT: Layout = {
  width: 720,
  height: 480,
  marginLeft: 84,
  marginRight: 16,
  marginTop: 40,
  marginBottom: 56,
};

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Split a point list into runs of consecutive points (no gap bridging). */
export function collectSegments(
  points: { x: number; y: number }[],
  usable: (p: { x: number; y: number }) => boolean,
): { x: number; y: number }[][] {
  const segments: { x: number; y: number }[][] = [];
  let current: { x: number; y: number }[] = [];
  for (const p of points) {
    if (usable(p)) {
      current.push(p);
    } else if (current.length > 0) {
      segments.push(current);
      current = [];
    }
  }
  if (current.length > 0) segments.push(current);
  return segments;
}

export function renderPanelSvg(
  rows: SweepRow[],
  panel: PanelSpec,
  logX = true,
  logY = true,
  layout: Layout = SVG_LAYOUT,
): string {
  const usable = okRows(rows);
  if (usable.length < 2) {
    throw new Error(`panel ${panel.id}: fewer than 2 rows with status ok`);
  }
  const xs: number[] = [];
  const ys: number[] = [];
  const perSeries = panel.series.map((s) => {
    const pts = seriesPoints(usable, s.column);
    for (const p of pts) {
      xs.push(p.x);
      if (!logY || p.y > 0) ys.push(p.y);
    }
    return { spec: s, pts };
  });
  if (ys.length === 0) {
    throw new Error(`panel ${panel.id}: no plottable data`);
  }

  const left = layout.marginLeft;
  const right = layout.width - layout.marginRight;
  const top = layout.marginTop;
  const bottom = layout.height - layout.marginBottom;
  const xScale = makeScale(xs, left, right, logX);
  const yScale = makeScale(ys, bottom, top, logY);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${layout.width}" ` +
      `height="${layout.height}" viewBox="0 0 ${layout.width} ${layout.height}" ` +
      `font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${layout.width}" height="${layout.height}" fill="white"/>`,
    `<text x="${(left + right) / 2}" y="${top - 16}" text-anchor="middle" ` +
      `font-size="15">${esc(panel.title)}</text>`,
  );

  for (const tick of xScale.ticks()) {
    const px = xScale.toPixel(tick).toFixed(2);
    parts.push(
      `<line x1="${px}" y1="${top}" x2="${px}" y2="${bottom}" stroke="#dddddd"/>`,
      `<text x="${px}" y="${bottom + 18}" text-anchor="middle" font-size="11">` +
        `${esc(tickLabel(tick, logX))}</text>`,
    );
  }
  for (const tick of yScale.ticks()) {
    const py = yScale.toPixel(tick).toFixed(2);
    parts.push(
      `<line x1="${left}" y1="${py}" x2="${right}" y2="${py}" stroke="#dddddd"/>`,
      `<text x="${left - 6}" y="${py}" text-anchor="end" dominant-baseline="middle" ` +
        `font-size="11">${esc(tickLabel(tick, logY))}</text>`,
    );
  }
  parts.push(
    `<rect x="${left}" y="${top}" width="${right - left}" height="${bottom - top}" ` +
      `fill="none" stroke="#333333"/>`,
    `<text x="${(left + right) / 2}" y="${layout.height - 12}" text-anchor="middle" ` +
      `font-size="13">${esc(panel.xLabel)}</text>`,
    `<text x="18" y="${(top + bottom) / 2}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 18 ${(top + bottom) / 2})">${esc(panel.yLabel)}</text>`,
  );

  for (const { spec, pts } of perSeries) {
    const segments = collectSegments(pts, (p) => !logY || p.y > 0);
    for (const segment of segments) {
      if (segment.length > 1) {
        const path = segment
          .map((p) => `${xScale.toPixel(p.x).toFixed(2)},${yScale.toPixel(p.y).toFixed(2)}`)
          .join(" ");
        parts.push(
          `<polyline points="${path}" fill="none" stroke="${spec.color}" stroke-width="1.6"/>`,
        );
      }
      if (spec.marker || segment.length === 1) {
        for (const p of segment) {
          parts.push(
            `<circle cx="${xScale.toPixel(p.x).toFixed(2)}" ` +
              `cy="${yScale.toPixel(p.y).toFixed(2)}" r="2.4" fill="${spec.color}"/>`,
          );
        }
      }
    }
  }

  const legendX = left + 12;
  let legendY = top + 16;
  for (const { spec, pts } of perSeries) {
    if (pts.length === 0) continue;
    parts.push(
      `<line x1="${legendX}" y1="${legendY - 4}" x2="${legendX + 26}" y2="${legendY - 4}" ` +
        `stroke="${spec.color}" stroke-width="2"/>`,
      `<text x="${legendX + 32}" y="${legendY}" font-size="12">${esc(spec.label)}</text>`,
    );
    legendY += 17;
  }

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
