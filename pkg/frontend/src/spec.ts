/**
 * Figure specification: a JSON document listing panels, each of which
 * plots one CSV column against time for one or more trajectory files.
 * Unknown keys are rejected, matching the simulator's config policy.
 */

import { readFileSync } from "node:fs";

export class SpecError extends Error {}

export interface SeriesSpec {
  csv: string;
  label: string;
}

export interface PanelSpec {
  column: string;
  title: string;
  xLabel: string;
  yLabel: string;
  series: SeriesSpec[];
}

export interface FigureSpec {
  title: string;
  output: string;
  panelWidth: number;
  panelHeight: number;
  panels: PanelSpec[];
}

function requireKeys(obj: Record<string, unknown>, allowed: string[], where: string): void {
  for (const key of Object.keys(obj)) {
    if (!allowed.includes(key)) {
      throw new SpecError(`unknown key '${key}' in ${where}`);
    }
  }
}

function stringField(
  obj: Record<string, unknown>, key: string, where: string, fallback?: string,
): string {
  const value = obj[key];
  if (value === undefined) {
    if (fallback !== undefined) return fallback;
    throw new SpecError(`${where} is missing required field '${key}'`);
  }
  if (typeof value !== "string" || value.length === 0) {
    throw new SpecError(`${where}.${key} must be a non-empty string`);
  }
  return value;
}

function numberField(
  obj: Record<string, unknown>, key: string, where: string, fallback: number,
): number {
  const value = obj[key];
  if (value === undefined) return fallback;
  if (typeof value !== "number" || !Number.isFinite(value) || value <= 0) {
    throw new SpecError(`${where}.${key} must be a positive number`);
  }
  return value;
}

function parsePanel(raw: unknown, where: string): PanelSpec {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SpecError(`${where} must be an object`);
  }
  const obj = raw as Record<string, unknown>;
  requireKeys(obj, ["column", "title", "x_label", "y_label", "series"], where);
  const column = stringField(obj, "column", where);
  const seriesRaw = obj["series"];
  if (!Array.isArray(seriesRaw) || seriesRaw.length === 0) {
    throw new SpecError(`${where}.series must be a non-empty array`);
  }
  const series = seriesRaw.map((entry, i) => {
    const sWhere = `${where}.series[${i}]`;
    if (typeof entry !== "object" || entry === null || Array.isArray(entry)) {
      throw new SpecError(`${sWhere} must be an object`);
    }
    const sObj = entry as Record<string, unknown>;
    requireKeys(sObj, ["csv", "label"], sWhere);
    return {
      csv: stringField(sObj, "csv", sWhere),
      label: stringField(sObj, "label", sWhere),
    };
  });
  return {
    column,
    title: stringField(obj, "title", where, column),
    xLabel: stringField(obj, "x_label", where, "t"),
    yLabel: stringField(obj, "y_label", where, column),
    series,
  };
}

export function parseFigureSpec(jsonText: string, specPath: string): FigureSpec {
  let raw: unknown;
  try {
    raw = JSON.parse(jsonText);
  } catch (err) {
    throw new SpecError(`${specPath}: not valid JSON: ${(err as Error).message}`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SpecError(`${specPath}: root must be an object`);
  }
  const obj = raw as Record<string, unknown>;
  requireKeys(obj, ["title", "output", "panel_width", "panel_height", "panels"], specPath);
  const panelsRaw = obj["panels"];
  if (!Array.isArray(panelsRaw) || panelsRaw.length === 0) {
    throw new SpecError(`${specPath}: panels must be a non-empty array`);
  }
  return {
    title: stringField(obj, "title", specPath, ""),
    output: stringField(obj, "output", specPath),
    panelWidth: numberField(obj, "panel_width", specPath, 340),
    panelHeight: numberField(obj, "panel_height", specPath, 280),
    panels: panelsRaw.map((p, i) => parsePanel(p, `${specPath}: panels[${i}]`)),
  };
}

export function loadFigureSpec(path: string): FigureSpec {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new SpecError(`cannot read figure spec ${path}: ${(err as Error).message}`);
  }
  return parseFigureSpec(text, path);
}
