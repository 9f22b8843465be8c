/**
 * Panel layout for the combining figures: one panel per Renyi order, bound
 * curves drawn as lines (BEC green, BSC blue, PSC red), scatter samples as
 * points, input entropy on the x axis against the combining excess on the
 * y axis.  Pure function of the parsed rows.
 */

import type { CurveRow, ScatterRow } from "./csv.js";
import { encodePng } from "./png.js";
import { Raster, type Color } from "./raster.js";
import { textWidth } from "./font.js";

const LN2 = Math.log(2);

export const FAMILY_COLORS: Record<string, Color> = {
  bec: [0, 140, 0],
  bsc: [0, 70, 220],
  psc: [210, 30, 30],
};

const POINT_COLOR: Color = [70, 70, 70];
const FRAME_COLOR: Color = [0, 0, 0];
const TEXT_COLOR: Color = [0, 0, 0];

const PANEL_WIDTH = 360;
const PANEL_HEIGHT = 300;
const MARGIN = { left: 58, right: 14, top: 28, bottom: 40 };

export interface FigureOptions {
  /** Panels to draw; defaults to every order present in the inputs. */
  alphaPanels?: number[];
}

interface PanelData {
  alpha: number;
  curves: Map<string, CurveRow[]>;
  points: ScatterRow[];
}

function collectPanels(curves: CurveRow[], scatter: ScatterRow[], wanted?: number[]): PanelData[] {
  const alphas = new Set<number>();
  for (const row of curves) {
    alphas.add(row.alpha);
  }
  for (const row of scatter) {
    alphas.add(row.alpha);
  }
  let panelAlphas = [...alphas].sort((a, b) => a - b);
  if (wanted !== undefined && wanted.length > 0) {
    panelAlphas = [...wanted].sort((a, b) => a - b);
  }
  if (panelAlphas.length === 0) {
    throw new Error("no panels: inputs contain no rows and no panel orders were given");
  }
  return panelAlphas.map((alpha) => {
    const byFamily = new Map<string, CurveRow[]>();
    for (const row of curves) {
      if (row.alpha === alpha) {
        const list = byFamily.get(row.family) ?? [];
        list.push(row);
        byFamily.set(row.family, list);
      }
    }
    for (const list of byFamily.values()) {
      list.sort((a, b) => a.h_in - b.h_in);
    }
    return {
      alpha,
      curves: byFamily,
      points: scatter.filter((row) => row.alpha === alpha),
    };
  });
}

function formatNumber(value: number): string {
  const rounded = Number(value.toPrecision(3));
  return `${rounded}`;
}

function yRange(panel: PanelData): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const rows of panel.curves.values()) {
    for (const row of rows) {
      lo = Math.min(lo, row.delta_h);
      hi = Math.max(hi, row.delta_h);
    }
  }
  for (const row of panel.points) {
    lo = Math.min(lo, row.delta_h);
    hi = Math.max(hi, row.delta_h);
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    return [-0.1, 0.1];
  }
  const pad = Math.max(0.05 * (hi - lo), 0.01);
  return [lo - pad, hi + pad];
}

function drawPanel(img: Raster, x0: number, y0: number, panel: PanelData): void {
  const plotX = x0 + MARGIN.left;
  const plotY = y0 + MARGIN.top;
  const plotW = PANEL_WIDTH - MARGIN.left - MARGIN.right;
  const plotH = PANEL_HEIGHT - MARGIN.top - MARGIN.bottom;
  const [yLo, yHi] = yRange(panel);

  const toX = (h: number): number => plotX + Math.round((h / LN2) * (plotW - 1));
  const toY = (d: number): number => plotY + plotH - 1 - Math.round(((d - yLo) / (yHi - yLo)) * (plotH - 1));

  // frame
  img.line(plotX, plotY, plotX + plotW - 1, plotY, FRAME_COLOR);
  img.line(plotX, plotY + plotH - 1, plotX + plotW - 1, plotY + plotH - 1, FRAME_COLOR);
  img.line(plotX, plotY, plotX, plotY + plotH - 1, FRAME_COLOR);
  img.line(plotX + plotW - 1, plotY, plotX + plotW - 1, plotY + plotH - 1, FRAME_COLOR);

  // x ticks at fixed entropy values
  for (const tick of [0, 0.2, 0.4, 0.6]) {
    const px = toX(tick);
    img.line(px, plotY + plotH - 1, px, plotY + plotH + 3, FRAME_COLOR);
    const label = formatNumber(tick);
    img.text(px - Math.floor(textWidth(label) / 2), plotY + plotH + 6, label, TEXT_COLOR);
  }
  // y ticks on an even grid
  for (let i = 0; i <= 4; i++) {
    const value = yLo + ((yHi - yLo) * i) / 4;
    const py = toY(value);
    img.line(plotX - 4, py, plotX, py, FRAME_COLOR);
    const label = formatNumber(value);
    img.text(plotX - 6 - textWidth(label), py - 3, label, TEXT_COLOR);
  }

  // titles and axis names
  const title = `alpha = ${formatNumber(panel.alpha)}`;
  img.text(x0 + Math.floor((PANEL_WIDTH - textWidth(title)) / 2), y0 + 8, title, TEXT_COLOR);
  img.text(
    plotX + Math.floor((plotW - textWidth("h_in")) / 2),
    y0 + PANEL_HEIGHT - 12,
    "h_in",
    TEXT_COLOR,
  );
  img.text(x0 + 4, plotY - 12, "delta_h", TEXT_COLOR);

  // scatter first so the bound curves stay visible on top
  for (const row of panel.points) {
    img.dot(toX(row.h_in), toY(row.delta_h), 2, POINT_COLOR);
  }
  for (const [family, rows] of [...panel.curves.entries()].sort()) {
    const color = FAMILY_COLORS[family] ?? FRAME_COLOR;
    for (let i = 1; i < rows.length; i++) {
      img.thickLine(
        toX(rows[i - 1].h_in),
        toY(rows[i - 1].delta_h),
        toX(rows[i].h_in),
        toY(rows[i].delta_h),
        color,
      );
    }
  }

  // legend
  let legendY = plotY + 6;
  for (const family of [...panel.curves.keys()].sort()) {
    const color = FAMILY_COLORS[family] ?? FRAME_COLOR;
    const lx = plotX + plotW - 12 - textWidth(family) - 18;
    img.fillRect(lx, legendY + 2, 14, 2, color);
    img.text(lx + 18, legendY, family, TEXT_COLOR);
    legendY += 12;
  }
}

export interface RenderedFigure {
  png: Uint8Array;
  panels: number[];
  width: number;
  height: number;
}

/** Render one panel per order into a single PNG. */
export function renderFigure(
  curves: CurveRow[],
  scatter: ScatterRow[],
  options: FigureOptions = {},
): RenderedFigure {
  const panels = collectPanels(curves, scatter, options.alphaPanels);
  const columns = Math.min(panels.length, 4);
  const rows = Math.ceil(panels.length / columns);
  const width = columns * PANEL_WIDTH;
  const height = rows * PANEL_HEIGHT;
  const img = new Raster(width, height);
  panels.forEach((panel, i) => {
    const col = i % columns;
    const row = Math.floor(i / columns);
    drawPanel(img, col * PANEL_WIDTH, row * PANEL_HEIGHT, panel);
  });
  return {
    png: encodePng(width, height, img.data),
    panels: panels.map((p) => p.alpha),
    width,
    height,
  };
}
