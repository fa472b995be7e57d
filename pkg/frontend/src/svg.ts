/**
 * Small deterministic SVG helpers: number formatting, nice axis ticks,
 * linear scales, and polyline paths. No randomness and no timestamps so a
 * re-render of the same inputs is byte-identical.
 */

export function fmt(x: number): string {
  if (x === 0) return "0";
  const rounded = Number(x.toPrecision(6));
  return String(rounded);
}

function niceNum(range: number, round: boolean): number {
  const exponent = Math.floor(Math.log10(range));
  const fraction = range / Math.pow(10, exponent);
  let nice: number;
  if (round) {
    if (fraction < 1.5) nice = 1;
    else if (fraction < 3) nice = 2;
    else if (fraction < 7) nice = 5;
    else nice = 10;
  } else {
    if (fraction <= 1) nice = 1;
    else if (fraction <= 2) nice = 2;
    else if (fraction <= 5) nice = 5;
    else nice = 10;
  }
  return nice * Math.pow(10, exponent);
}

export function niceTicks(min: number, max: number, count = 5): number[] {
  if (!(max > min)) {
    // degenerate extent: pad around the value
    const pad = Math.max(Math.abs(min) * 0.1, 1e-6);
    return niceTicks(min - pad, max + pad, count);
  }
  const step = niceNum(niceNum(max - min, false) / Math.max(count - 1, 1), true);
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    // snap away float noise like 0.30000000000000004
    ticks.push(Number(v.toFixed(12)));
  }
  return ticks;
}

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(
  domainMin: number, domainMax: number, rangeMin: number, rangeMax: number,
): LinearScale {
  let lo = domainMin;
  let hi = domainMax;
  if (!(hi > lo)) {
    const pad = Math.max(Math.abs(lo) * 0.1, 1e-6);
    lo -= pad;
    hi += pad;
  }
  const k = (rangeMax - rangeMin) / (hi - lo);
  const scale = ((value: number) => rangeMin + (value - lo) * k) as LinearScale;
  scale.domain = [lo, hi];
  return scale;
}

export function polylinePath(xs: number[], ys: number[]): string {
  const parts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    const cmd = i === 0 ? "M" : "L";
    parts.push(`${cmd}${fmt(xs[i]!)} ${fmt(ys[i]!)}`);
  }
  return parts.join(" ");
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Colorblind-friendly line palette; assignment is by sorted label order. */
export const PALETTE = [
  "#0072b2", "#d55e00", "#009e73", "#cc79a7", "#e69f00", "#56b4e9", "#999999",
] as const;

export function colorForLabel(label: string, sortedLabels: string[]): string {
  const index = Math.max(sortedLabels.indexOf(label), 0);
  return PALETTE[index % PALETTE.length]!;
}
