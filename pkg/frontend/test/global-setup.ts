/**
 * Generates real preset outputs through the simulator CLI once per
 * checkout (cached in test/.fixtures). The figure-rendering acceptance
 * test consumes these files; everything else uses synthetic data.
 */

import { execFileSync } from "node:child_process";
import { existsSync } from "node:fs";
import { dirname, resolve } from "node:path";
import { fileURLToPath } from "node:url";

export const PRESETS = [
  "ad-weak", "ad-mid", "ad-strong",
  "deph-weak", "deph-strong",
  "markov", "nonmarkov-b01", "nonmarkov-b05", "nonmarkov-b10",
];

export const FIXTURES_DIR = resolve(
  dirname(fileURLToPath(import.meta.url)), ".fixtures",
);

export default function setup(): void {
  const missing = PRESETS.filter(
    (name) => !existsSync(resolve(FIXTURES_DIR, name, "timeseries.csv")),
  );
  if (missing.length === 0) return;
  console.log(`generating preset fixtures: ${missing.join(", ")}`);
  for (const name of missing) {
    execFileSync(
      "python3",
      ["-m", "gqbsim.cli", "preset", name, "--output-dir", FIXTURES_DIR],
      { stdio: "inherit", timeout: 150_000 },
    );
  }
}
