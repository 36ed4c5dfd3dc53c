/**
 * Aggregation of raw trial rows into plottable series, mirroring the
 * harness's own statistics (means over successful trials only, sample
 * standard deviation), plus the growth-law table used for overlays.
 */

import { SuiteSummary, TrialRow } from './schema.js';

export interface CellPoint {
  n: number;
  tInit: number;
  trials: number;
  successes: number;
  mean: number | null;
  std: number | null;
  stderr: number | null;
}

export function computeCells(rows: TrialRow[]): CellPoint[] {
  const groups = new Map<string, { n: number; tInit: number; all: number; evals: number[] }>();
  for (const row of rows) {
    const key = `${row.n}|${row.tInit}`;
    let group = groups.get(key);
    if (!group) {
      group = { n: row.n, tInit: row.tInit, all: 0, evals: [] };
      groups.set(key, group);
    }
    group.all += 1;
    if (row.success) {
      group.evals.push(row.evaluations);
    }
  }
  const cells: CellPoint[] = [];
  for (const g of groups.values()) {
    const k = g.evals.length;
    const mean = k > 0 ? g.evals.reduce((a, b) => a + b, 0) / k : null;
    let std: number | null = null;
    if (k > 1 && mean !== null) {
      const ss = g.evals.reduce((acc, v) => acc + (v - mean) * (v - mean), 0);
      std = Math.sqrt(ss / (k - 1));
    }
    cells.push({
      n: g.n, tInit: g.tInit, trials: g.all, successes: k,
      mean, std,
      stderr: std !== null && k > 0 ? std / Math.sqrt(k) : null,
    });
  }
  cells.sort((a, b) => a.n - b.n || a.tInit - b.tInit);
  return cells;
}

/** Same candidate laws as the harness fitter (natural log). */
export const GROWTH_LAWS: Record<string, (n: number, tInit: number) => number> = {
  n: (n) => n,
  n_log_n: (n) => n * Math.log(n),
  n2: (n) => n * n,
  n2_log_n: (n) => n * n * Math.log(n),
  n3: (n) => n * n * n,
  t_init: (_n, t) => t,
  n_t_init: (n, t) => n * t,
  t_init_plus_n_log_n: (n, t) => t + n * Math.log(n),
  n_t_init_plus_n2_log_n: (n, t) => n * t + n * n * Math.log(n),
};

/** Least-squares constant for mean ~ c * g, as the harness computes it. */
export function fitConstant(cells: CellPoint[], law: string): number {
  const g = GROWTH_LAWS[law];
  if (!g) {
    throw new Error(`unknown growth law '${law}'; one of ${Object.keys(GROWTH_LAWS).join(', ')}`);
  }
  let num = 0;
  let den = 0;
  for (const cell of cells) {
    if (cell.mean === null) continue;
    const value = g(cell.n, cell.tInit);
    if (value <= 0) {
      throw new Error(`growth law '${law}' is not positive at n=${cell.n}, t_init=${cell.tInit}`);
    }
    num += cell.mean * value;
    den += value * value;
  }
  if (den === 0) {
    throw new Error(`no successful cells to fit '${law}' against`);
  }
  return num / den;
}

/** Overlay constant: prefer the summary's fitted value, else refit. */
export function overlayConstant(cells: CellPoint[], summary: SuiteSummary | null,
                                law: string): number {
  if (summary) {
    const fit = summary.fits.find((f) => f.candidate === law);
    if (fit) return fit.constant;
  }
  return fitConstant(cells, law);
}

/**
 * Cross-check recomputed means against the summary document; returns
 * human-readable mismatch descriptions (empty means consistent).
 */
export function checkAgainstSummary(cells: CellPoint[], summary: SuiteSummary,
                                    relTol = 1e-9): string[] {
  const problems: string[] = [];
  for (const cell of summary.cells) {
    const mine = cells.find((c) => c.n === cell.n && c.tInit === cell.t_init);
    if (!mine) {
      problems.push(`summary cell n=${cell.n}, t_init=${cell.t_init} missing from CSV`);
      continue;
    }
    const a = mine.mean;
    const b = cell.mean_evaluations;
    if ((a === null) !== (b === null)) {
      problems.push(`cell n=${cell.n}: mean presence differs (csv ${a}, summary ${b})`);
    } else if (a !== null && b !== null) {
      const scale = Math.max(Math.abs(a), Math.abs(b), 1);
      if (Math.abs(a - b) > relTol * scale) {
        problems.push(`cell n=${cell.n}: mean ${a} != summary ${b}`);
      }
    }
  }
  return problems;
}
