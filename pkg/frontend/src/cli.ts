#!/usr/bin/env node
/**
 * plotkit CLI: `plot <figure-spec-file> [--data-root DIR] [--out FILE]`.
 *
 * Trajectory paths inside the spec resolve against --data-root (default:
 * the spec file's directory). The output path comes from --out or the
 * spec's `output` field, resolved against the working directory.
 */

import { dirname, resolve } from "node:path";
import process from "node:process";

import { DataError } from "./csv.js";
import { renderToFile } from "./render.js";
import { loadFigureSpec, SpecError } from "./spec.js";

function usage(): string {
  return "usage: plotkit plot <figure-spec.json> [--data-root DIR] [--out FILE]";
}

export function main(argv: string[]): number {
  const args = [...argv];
  if (args.length === 0 || args[0] !== "plot") {
    console.error(usage());
    return 1;
  }
  args.shift();

  let specPath: string | undefined;
  let dataRoot: string | undefined;
  let outPath: string | undefined;
  while (args.length > 0) {
    const arg = args.shift()!;
    if (arg === "--data-root") {
      dataRoot = args.shift();
      if (dataRoot === undefined) {
        console.error("--data-root needs a value");
        return 1;
      }
    } else if (arg === "--out") {
      outPath = args.shift();
      if (outPath === undefined) {
        console.error("--out needs a value");
        return 1;
      }
    } else if (specPath === undefined) {
      specPath = arg;
    } else {
      console.error(`unexpected argument '${arg}'\n${usage()}`);
      return 1;
    }
  }
  if (specPath === undefined) {
    console.error(usage());
    return 1;
  }

  try {
    const spec = loadFigureSpec(specPath);
    const root = dataRoot ?? dirname(resolve(specPath));
    const target = outPath ?? spec.output;
    renderToFile(spec, root, target);
    console.log(`wrote ${target}`);
    return 0;
  } catch (err) {
    if (err instanceof SpecError || err instanceof DataError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${resolve(process.argv[1])}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
