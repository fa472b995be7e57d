/**
 * Loader for the simulator's trajectory CSV schema:
 * `t,energy,purity,coherence,ergotropy,min_eig,rate` with one numeric row
 * per sampled time. Errors name the offending file and column so a broken
 * figure spec is diagnosable from the message alone.
 */

import { readFileSync } from "node:fs";

export interface TimeSeries {
  path: string;
  columns: string[];
  rows: number[][];
}

export class DataError extends Error {}

export function parseTimeSeries(text: string, path: string): TimeSeries {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new DataError(`${path}: expected a header row and at least one data row`);
  }
  const columns = lines[0]!.split(",");
  if (columns.length < 2 || columns[0] !== "t") {
    throw new DataError(`${path}: first header column must be 't', got '${columns[0]}'`);
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i]!.split(",");
    if (cells.length !== columns.length) {
      throw new DataError(
        `${path}: row ${i + 1} has ${cells.length} cells, header has ${columns.length}`,
      );
    }
    const row = cells.map((cell) => Number(cell));
    const bad = row.findIndex((x) => !Number.isFinite(x));
    if (bad >= 0) {
      throw new DataError(
        `${path}: row ${i + 1}, column '${columns[bad]}' is not a finite number`,
      );
    }
    rows.push(row);
  }
  return { path, columns, rows };
}

export function loadTimeSeries(path: string): TimeSeries {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new DataError(`cannot read trajectory file ${path}: ${(err as Error).message}`);
  }
  return parseTimeSeries(text, path);
}

export function column(series: TimeSeries, name: string): number[] {
  const index = series.columns.indexOf(name);
  if (index < 0) {
    throw new DataError(
      `${series.path}: no column '${name}' (have: ${series.columns.join(", ")})`,
    );
  }
  return series.rows.map((row) => row[index]!);
}
