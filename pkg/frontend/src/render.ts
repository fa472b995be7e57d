/**
 * Figure assembly: resolve each panel's trajectory files against the data
 * root, plot the named column against time, and emit one standalone SVG.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import { column, loadTimeSeries, TimeSeries } from "./csv.js";
import { FigureSpec, PanelSpec } from "./spec.js";
import {
  colorForLabel,
  escapeXml,
  fmt,
  linearScale,
  niceTicks,
  polylinePath,
} from "./svg.js";

const MARGIN = { top: 34, right: 14, bottom: 42, left: 56 };
const TITLE_BAND = 26;

interface ResolvedSeries {
  label: string;
  t: number[];
  values: number[];
}

function resolvePanel(panel: PanelSpec, dataRoot: string): ResolvedSeries[] {
  return panel.series.map((s) => {
    const series: TimeSeries = loadTimeSeries(resolve(dataRoot, s.csv));
    return {
      label: s.label,
      t: column(series, "t"),
      values: column(series, panel.column),
    };
  });
}

function renderPanel(
  panel: PanelSpec,
  resolved: ResolvedSeries[],
  originX: number,
  originY: number,
  width: number,
  height: number,
  sortedLabels: string[],
): string {
  const plotX = originX + MARGIN.left;
  const plotY = originY + MARGIN.top;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const allT = resolved.flatMap((s) => s.t);
  const allV = resolved.flatMap((s) => s.values);
  const x = linearScale(Math.min(...allT), Math.max(...allT), plotX, plotX + plotW);
  const y = linearScale(Math.min(...allV), Math.max(...allV), plotY + plotH, plotY);

  const parts: string[] = [];
  parts.push(
    `<rect x="${fmt(plotX)}" y="${fmt(plotY)}" width="${fmt(plotW)}" ` +
    `height="${fmt(plotH)}" fill="none" stroke="#333" stroke-width="1"/>`,
  );

  for (const tick of niceTicks(x.domain[0], x.domain[1], 6)) {
    const px = x(tick);
    if (px < plotX - 1e-6 || px > plotX + plotW + 1e-6) continue;
    parts.push(
      `<line x1="${fmt(px)}" y1="${fmt(plotY + plotH)}" x2="${fmt(px)}" ` +
      `y2="${fmt(plotY + plotH + 5)}" stroke="#333" stroke-width="1"/>`,
      `<text x="${fmt(px)}" y="${fmt(plotY + plotH + 18)}" text-anchor="middle" ` +
      `font-size="11">${fmt(tick)}</text>`,
    );
  }
  for (const tick of niceTicks(y.domain[0], y.domain[1], 6)) {
    const py = y(tick);
    if (py < plotY - 1e-6 || py > plotY + plotH + 1e-6) continue;
    parts.push(
      `<line x1="${fmt(plotX - 5)}" y1="${fmt(py)}" x2="${fmt(plotX)}" ` +
      `y2="${fmt(py)}" stroke="#333" stroke-width="1"/>`,
      `<text x="${fmt(plotX - 8)}" y="${fmt(py + 4)}" text-anchor="end" ` +
      `font-size="11">${fmt(tick)}</text>`,
    );
  }

  for (const series of resolved) {
    const path = polylinePath(series.t.map(x), series.values.map(y));
    const color = colorForLabel(series.label, sortedLabels);
    parts.push(
      `<path d="${path}" fill="none" stroke="${color}" stroke-width="1.6"/>`,
    );
  }

  parts.push(
    `<text x="${fmt(plotX + plotW / 2)}" y="${fmt(originY + 18)}" ` +
    `text-anchor="middle" font-size="13" font-weight="bold">` +
    `${escapeXml(panel.title)}</text>`,
    `<text x="${fmt(plotX + plotW / 2)}" y="${fmt(plotY + plotH + 34)}" ` +
    `text-anchor="middle" font-size="12">${escapeXml(panel.xLabel)}</text>`,
    `<text x="${fmt(originX + 16)}" y="${fmt(plotY + plotH / 2)}" ` +
    `text-anchor="middle" font-size="12" ` +
    `transform="rotate(-90 ${fmt(originX + 16)} ${fmt(plotY + plotH / 2)})">` +
    `${escapeXml(panel.yLabel)}</text>`,
  );

  // per-panel legend, top-left inside the plot area
  let legendY = plotY + 14;
  for (const label of resolved.map((s) => s.label)) {
    const color = colorForLabel(label, sortedLabels);
    parts.push(
      `<line x1="${fmt(plotX + 8)}" y1="${fmt(legendY - 4)}" ` +
      `x2="${fmt(plotX + 30)}" y2="${fmt(legendY - 4)}" stroke="${color}" ` +
      `stroke-width="1.6"/>`,
      `<text x="${fmt(plotX + 35)}" y="${fmt(legendY)}" font-size="11">` +
      `${escapeXml(label)}</text>`,
    );
    legendY += 15;
  }

  return parts.join("\n");
}

export function renderFigure(spec: FigureSpec, dataRoot: string): string {
  const width = spec.panelWidth * spec.panels.length;
  const titleBand = spec.title ? TITLE_BAND : 0;
  const height = spec.panelHeight + titleBand;

  const sortedLabels = [...new Set(
    spec.panels.flatMap((p) => p.series.map((s) => s.label)),
  )].sort();

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}" ` +
    `font-family="Helvetica, Arial, sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
  );
  if (spec.title) {
    parts.push(
      `<text x="${fmt(width / 2)}" y="18" text-anchor="middle" ` +
      `font-size="15" font-weight="bold">${escapeXml(spec.title)}</text>`,
    );
  }
  spec.panels.forEach((panel, i) => {
    const resolved = resolvePanel(panel, dataRoot);
    parts.push(renderPanel(
      panel, resolved, i * spec.panelWidth, titleBand,
      spec.panelWidth, spec.panelHeight, sortedLabels,
    ));
  });
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

export function renderToFile(spec: FigureSpec, dataRoot: string, outputPath: string): string {
  const svg = renderFigure(spec, dataRoot);
  mkdirSync(dirname(resolve(outputPath)), { recursive: true });
  writeFileSync(outputPath, svg, "utf-8");
  return outputPath;
}
