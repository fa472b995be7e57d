/**
 * Acceptance: the three bundled figure layouts render from real preset
 * outputs (generated through the simulator CLI by the global setup) and
 * re-rendering produces byte-identical images.
 */

import { existsSync, readFileSync } from "node:fs";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { renderFigure, renderToFile } from "../src/render.js";
import { loadFigureSpec } from "../src/spec.js";
import { FIXTURES_DIR, PRESETS } from "./global-setup.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const FIGURES = resolve(HERE, "..", "figures");

describe("bundled figure layouts", () => {
  it("preset fixtures exist", () => {
    for (const preset of PRESETS) {
      expect(existsSync(join(FIXTURES_DIR, preset, "timeseries.csv")),
             `missing fixture for ${preset}`).toBe(true);
    }
  });

  for (const name of ["fig1", "fig2", "fig3"]) {
    it(`renders ${name} deterministically`, () => {
      const spec = loadFigureSpec(join(FIGURES, `${name}.json`));
      const first = renderFigure(spec, FIXTURES_DIR);
      expect(first).toContain("</svg>");
      const expectedSeries = spec.panels.reduce(
        (n, panel) => n + panel.series.length, 0);
      expect(first.match(/<path d="M/g)).toHaveLength(expectedSeries);

      const second = renderFigure(spec, FIXTURES_DIR);
      expect(second).toBe(first);

      const out = join(FIXTURES_DIR, `${name}.svg`);
      renderToFile(spec, FIXTURES_DIR, out);
      const onDiskFirst = readFileSync(out);
      renderToFile(spec, FIXTURES_DIR, out);
      expect(readFileSync(out).equals(onDiskFirst)).toBe(true);
    });
  }
});
