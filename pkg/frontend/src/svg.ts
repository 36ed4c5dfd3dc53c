/**
 * Self-contained SVG rendering: a log-log scaling figure (per-cell mean
 * evaluations with standard-error bars and an optional fitted c*g(n)
 * overlay) and a ratio figure (mean / g(n) against the fitted constant).
 * Output is deterministic: same inputs, same bytes.
 */

import { SuiteSummary } from './schema.js';
import { CellPoint, GROWTH_LAWS, overlayConstant } from './series.js';

export interface PlotSpec {
  law: string | null;
  ratio: boolean;
  width: number;
  height: number;
  title: string | null;
}

export const DEFAULT_SPEC: PlotSpec = {
  law: null, ratio: false, width: 760, height: 520, title: null,
};

const MARGIN = { top: 48, right: 32, bottom: 56, left: 84 };
const COLORS = { points: '#1f5fa8', overlay: '#c44e52', grid: '#d0d0d0', axis: '#333333' };

const LAW_LABELS: Record<string, string> = {
  n: 'n',
  n_log_n: 'n·ln n',
  n2: 'n²',
  n2_log_n: 'n²·ln n',
  n3: 'n³',
  t_init: 'T_init',
  n_t_init: 'n·T_init',
  t_init_plus_n_log_n: 'T_init + n·ln n',
  n_t_init_plus_n2_log_n: 'n·T_init + n²·ln n',
};

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function fmt(value: number): string {
  // short deterministic coordinate formatting
  return Number(value.toFixed(2)).toString();
}

function tickLabel(value: number): string {
  if (value >= 100000 || value < 0.01) return value.toExponential(0).replace('+', '');
  return Number(value.toPrecision(6)).toString();
}

function decadeTicks(min: number, max: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(min)); e <= Math.ceil(Math.log10(max)); e++) {
    const tick = Math.pow(10, e);
    if (tick >= min / 1.0001 && tick <= max * 1.0001) ticks.push(tick);
  }
  return ticks;
}

interface Scale { (value: number): number; }

function logScale(min: number, max: number, lo: number, hi: number): Scale {
  const a = Math.log(min);
  const b = Math.log(max);
  return (v) => lo + ((Math.log(v) - a) / (b - a || 1)) * (hi - lo);
}

function linearScale(min: number, max: number, lo: number, hi: number): Scale {
  return (v) => lo + ((v - min) / (max - min || 1)) * (hi - lo);
}

/** Render the figure; cells must already be aggregated from the CSV. */
export function renderFigure(cells: CellPoint[], summary: SuiteSummary | null,
                             spec: PlotSpec): string {
  const points = cells.filter((c) => c.mean !== null);
  if (points.length === 0) {
    throw new Error('nothing to plot: no cell has successful trials');
  }
  if (spec.ratio && !spec.law) {
    throw new Error('a ratio plot needs --law to divide by');
  }
  const law = spec.law;
  let constant = 0;
  let g: ((n: number, t: number) => number) | null = null;
  if (law) {
    g = GROWTH_LAWS[law];
    if (!g) {
      throw new Error(`unknown growth law '${law}'; one of ${Object.keys(GROWTH_LAWS).join(', ')}`);
    }
    constant = overlayConstant(points, summary, law);
  }

  const innerW = spec.width - MARGIN.left - MARGIN.right;
  const innerH = spec.height - MARGIN.top - MARGIN.bottom;
  const xs = points.map((p) => p.n);
  const xMin = Math.min(...xs) / 1.15;
  const xMax = Math.max(...xs) * 1.15;
  const x = logScale(xMin, xMax, MARGIN.left, MARGIN.left + innerW);

  const yValues: number[] = [];
  for (const p of points) {
    if (spec.ratio) {
      yValues.push(p.mean! / g!(p.n, p.tInit));
    } else {
      yValues.push(p.mean!);
      if (p.stderr !== null) {
        yValues.push(p.mean! + p.stderr, Math.max(p.mean! - p.stderr, p.mean! / 10));
      }
      if (g) yValues.push(constant * g(p.n, p.tInit));
    }
  }
  if (spec.ratio) yValues.push(constant);
  let yMin = Math.min(...yValues);
  let yMax = Math.max(...yValues);
  if (spec.ratio) {
    const pad = (yMax - yMin || yMax || 1) * 0.15;
    yMin = Math.max(0, yMin - pad);
    yMax = yMax + pad;
  } else {
    yMin /= 1.3;
    yMax *= 1.3;
  }
  const y = spec.ratio
    ? linearScale(yMin, yMax, MARGIN.top + innerH, MARGIN.top)
    : logScale(yMin, yMax, MARGIN.top + innerH, MARGIN.top);

  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${spec.width}" height="${spec.height}" viewBox="0 0 ${spec.width} ${spec.height}" font-family="Helvetica, Arial, sans-serif">`);
  parts.push(`<rect width="${spec.width}" height="${spec.height}" fill="white"/>`);

  const title = spec.title ?? (summary
    ? `${summary.problem} / ${summary.algo} (${summary.trials} trials per cell)`
    : 'mean evaluations by problem size');
  parts.push(`<text x="${spec.width / 2}" y="24" text-anchor="middle" font-size="16" fill="${COLORS.axis}">${esc(title)}</text>`);

  // gridlines and ticks
  const xTicks = [...new Set([...decadeTicks(xMin, xMax), ...xs])].sort((a, b) => a - b);
  for (const tick of xTicks) {
    const px = fmt(x(tick));
    parts.push(`<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${MARGIN.top + innerH}" stroke="${COLORS.grid}" stroke-width="0.5"/>`);
    parts.push(`<text x="${px}" y="${MARGIN.top + innerH + 18}" text-anchor="middle" font-size="11" fill="${COLORS.axis}">${tickLabel(tick)}</text>`);
  }
  const yTicks = spec.ratio
    ? [yMin, (yMin + yMax) / 2, yMax]
    : decadeTicks(yMin, yMax);
  for (const tick of yTicks) {
    const py = fmt(y(tick));
    parts.push(`<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + innerW}" y2="${py}" stroke="${COLORS.grid}" stroke-width="0.5"/>`);
    parts.push(`<text x="${MARGIN.left - 8}" y="${py}" text-anchor="end" dominant-baseline="middle" font-size="11" fill="${COLORS.axis}">${tickLabel(tick)}</text>`);
  }
  parts.push(`<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${innerW}" height="${innerH}" fill="none" stroke="${COLORS.axis}"/>`);

  // axis labels
  parts.push(`<text x="${MARGIN.left + innerW / 2}" y="${spec.height - 14}" text-anchor="middle" font-size="13" fill="${COLORS.axis}">problem size n (log)</text>`);
  const yLabel = spec.ratio
    ? `mean evaluations / ${LAW_LABELS[law!] ?? law}`
    : 'mean evaluations to success (log)';
  parts.push(`<text x="20" y="${MARGIN.top + innerH / 2}" text-anchor="middle" font-size="13" fill="${COLORS.axis}" transform="rotate(-90 20 ${MARGIN.top + innerH / 2})">${esc(yLabel)}</text>`);

  // overlay curve or constant line
  if (g && !spec.ratio) {
    const steps = 120;
    const coords: string[] = [];
    // interpolate t_init alongside n so mixed laws stay meaningful
    const sorted = [...points].sort((a, b) => a.n - b.n);
    for (let i = 0; i <= steps; i++) {
      const nv = Math.exp(Math.log(sorted[0].n) + (i / steps) *
        (Math.log(sorted[sorted.length - 1].n) - Math.log(sorted[0].n)));
      let tv = sorted[0].tInit;
      for (let j = 1; j < sorted.length; j++) {
        if (nv >= sorted[j - 1].n) {
          const span = sorted[j].n - sorted[j - 1].n || 1;
          const frac = Math.min(1, Math.max(0, (nv - sorted[j - 1].n) / span));
          tv = sorted[j - 1].tInit + frac * (sorted[j].tInit - sorted[j - 1].tInit);
        }
      }
      coords.push(`${fmt(x(nv))},${fmt(y(constant * g(nv, tv)))}`);
    }
    parts.push(`<polyline points="${coords.join(' ')}" fill="none" stroke="${COLORS.overlay}" stroke-width="1.8" stroke-dasharray="6 3"/>`);
  }
  if (spec.ratio) {
    const py = fmt(y(constant));
    parts.push(`<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + innerW}" y2="${py}" stroke="${COLORS.overlay}" stroke-width="1.8" stroke-dasharray="6 3"/>`);
  }

  // data points with error bars; the plotted mean rides along as a
  // machine-checkable attribute
  for (const p of points) {
    const value = spec.ratio ? p.mean! / g!(p.n, p.tInit) : p.mean!;
    const px = fmt(x(p.n));
    const py = fmt(y(value));
    if (!spec.ratio && p.stderr !== null && p.stderr > 0) {
      const hi = fmt(y(p.mean! + p.stderr));
      const lo = fmt(y(Math.max(p.mean! - p.stderr, p.mean! / 10)));
      parts.push(`<line x1="${px}" y1="${lo}" x2="${px}" y2="${hi}" stroke="${COLORS.points}" stroke-width="1.2"/>`);
      parts.push(`<line x1="${Number(px) - 4}" y1="${hi}" x2="${Number(px) + 4}" y2="${hi}" stroke="${COLORS.points}" stroke-width="1.2"/>`);
      parts.push(`<line x1="${Number(px) - 4}" y1="${lo}" x2="${Number(px) + 4}" y2="${lo}" stroke="${COLORS.points}" stroke-width="1.2"/>`);
    }
    parts.push(`<circle cx="${px}" cy="${py}" r="4" fill="${COLORS.points}" data-n="${p.n}" data-t-init="${p.tInit}" data-mean="${p.mean}"/>`);
  }

  // legend
  const legendX = MARGIN.left + 12;
  parts.push(`<circle cx="${legendX}" cy="${MARGIN.top + 14}" r="4" fill="${COLORS.points}"/>`);
  parts.push(`<text x="${legendX + 10}" y="${MARGIN.top + 18}" font-size="12" fill="${COLORS.axis}">mean ± standard error</text>`);
  if (law) {
    const cText = Number(constant.toPrecision(4));
    const label = spec.ratio
      ? `fitted constant c = ${cText}`
      : `${cText} · ${LAW_LABELS[law] ?? law}`;
    parts.push(`<line x1="${legendX - 6}" y1="${MARGIN.top + 34}" x2="${legendX + 6}" y2="${MARGIN.top + 34}" stroke="${COLORS.overlay}" stroke-width="1.8" stroke-dasharray="6 3"/>`);
    parts.push(`<text x="${legendX + 10}" y="${MARGIN.top + 38}" font-size="12" fill="${COLORS.axis}">${esc(label)}</text>`);
  }

  parts.push('</svg>');
  return parts.join('\n') + '\n';
}
