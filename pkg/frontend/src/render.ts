/** Panel rendering: CSV rows in, SVG + PNG files out. */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { okRows, parseSweepCsv, seriesPoints, type SweepRow } from "./csv.js";
import { panelsFor, type PanelSpec } from "./panels.js";
import { Canvas, parseColor, type Rgb } from "./raster.js";
import { makeScale, tickLabel } from "./scale.js";
import { collectSegments, renderPanelSvg } from "./svg.js";

export interface PlotSpec {
  inputCsv: string;
  outDir: string;
  panel: "a" | "b" | "both";
  logX?: boolean;
  logY?: boolean;
}

const BLACK: Rgb = [0, 0, 0];
const GRID: Rgb = [221, 221, 221];

export function renderPanelPng(
  rows: SweepRow[],
  panel: PanelSpec,
  logX = true,
  logY = true,
): Buffer {
  const usable = okRows(rows);
  if (usable.length < 2) {
    throw new Error(`panel ${panel.id}: fewer than 2 rows with status ok`);
  }
  const width = 960;
  const height = 640;
  const left = 118;
  const right = width - 24;
  const top = 56;
  const bottom = height - 76;

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
  const xScale = makeScale(xs, left, right, logX);
  const yScale = makeScale(ys, bottom, top, logY);

  const canvas = new Canvas(width, height);
  for (const tick of xScale.ticks()) {
    const px = xScale.toPixel(tick);
    canvas.line(px, top, px, bottom, GRID);
    canvas.textCentered(px, bottom + 12, tickLabel(tick, logX), BLACK, 2);
  }
  for (const tick of yScale.ticks()) {
    const py = yScale.toPixel(tick);
    canvas.line(left, py, right, py, GRID);
    const label = tickLabel(tick, logY);
    canvas.text(left - 8 - label.length * 12, py - 7, label, BLACK, 2);
  }
  canvas.line(left, top, right, top, BLACK);
  canvas.line(left, bottom, right, bottom, BLACK);
  canvas.line(left, top, left, bottom, BLACK);
  canvas.line(right, top, right, bottom, BLACK);
  canvas.textCentered((left + right) / 2, 18, panel.title, BLACK, 2);
  canvas.textCentered((left + right) / 2, height - 34, panel.xLabel, BLACK, 2);
  canvas.textVertical(12, (top + bottom) / 2, panel.yLabel, BLACK, 2);

  for (const { spec, pts } of perSeries) {
    const color = parseColor(spec.color);
    for (const segment of collectSegments(pts, (p) => !logY || p.y > 0)) {
      for (let i = 1; i < segment.length; i++) {
        canvas.line(
          xScale.toPixel(segment[i - 1]!.x),
          yScale.toPixel(segment[i - 1]!.y),
          xScale.toPixel(segment[i]!.x),
          yScale.toPixel(segment[i]!.y),
          color,
          2,
        );
      }
      if (spec.marker || segment.length === 1) {
        for (const p of segment) {
          canvas.marker(xScale.toPixel(p.x), yScale.toPixel(p.y), color);
        }
      }
    }
  }

  let legendY = top + 14;
  for (const { spec, pts } of perSeries) {
    if (pts.length === 0) continue;
    const color = parseColor(spec.color);
    canvas.fillRect(left + 14, legendY + 4, 26, 4, color);
    canvas.text(left + 48, legendY, spec.label, BLACK, 2);
    legendY += 22;
  }
  return canvas.toPng();
}

export interface RenderedFile {
  path: string;
  bytes: number;
}

/** Render the selected panel(s); one SVG and one PNG per panel. */
export function render(spec: PlotSpec): RenderedFile[] {
  const text = readFileSync(spec.inputCsv, "utf-8");
  const rows = parseSweepCsv(text);
  const logX = spec.logX ?? true;
  const logY = spec.logY ?? true;
  mkdirSync(spec.outDir, { recursive: true });
  const written: RenderedFile[] = [];
  for (const panel of panelsFor(spec.panel)) {
    const svg = renderPanelSvg(rows, panel, logX, logY);
    const svgPath = join(spec.outDir, `panel_${panel.id}.svg`);
    writeFileSync(svgPath, svg, "utf-8");
    written.push({ path: svgPath, bytes: Buffer.byteLength(svg) });

    const png = renderPanelPng(rows, panel, logX, logY);
    const pngPath = join(spec.outDir, `panel_${panel.id}.png`);
    writeFileSync(pngPath, png);
    written.push({ path: pngPath, bytes: png.length });
  }
  return written;
}
