#!/usr/bin/env node
/**
 * Render a scaling or ratio figure from harness output files.
 *
 *   gplab-plot --csv runs.csv --out figure.svg
 *             [--summary runs.summary.json] [--law n_log_n] [--ratio]
 *             [--width 760] [--height 520] [--title "..."]
 *
 * The figure plots per-(n, t_init) mean evaluations recomputed from the
 * raw CSV; when a summary is given the means must agree with it and the
 * overlay constant is taken from its fit.  Exits nonzero with a message
 * on schema mismatches, an empty CSV, or inconsistent inputs, writing
 * no file in that case.
 */

import * as fs from 'fs';
import * as path from 'path';

import { parseResultsCsv, parseSummaryJson, SchemaError, SuiteSummary } from './schema.js';
import { checkAgainstSummary, computeCells } from './series.js';
import { DEFAULT_SPEC, PlotSpec, renderFigure } from './svg.js';

interface Args {
  csv: string;
  out: string;
  summary: string | null;
  spec: PlotSpec;
}

const USAGE = 'usage: gplab-plot --csv FILE --out FILE [--summary FILE] ' +
  '[--law NAME] [--ratio] [--width N] [--height N] [--title TEXT]';

function parseArgs(argv: string[]): Args {
  const values = new Map<string, string>();
  let ratio = false;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === '--ratio') {
      ratio = true;
      continue;
    }
    if (!arg.startsWith('--')) {
      throw new Error(`unexpected argument '${arg}'\n${USAGE}`);
    }
    const key = arg.slice(2);
    if (!['csv', 'out', 'summary', 'law', 'width', 'height', 'title'].includes(key)) {
      throw new Error(`unknown option '${arg}'\n${USAGE}`);
    }
    const value = argv[++i];
    if (value === undefined) {
      throw new Error(`option '${arg}' needs a value\n${USAGE}`);
    }
    values.set(key, value);
  }
  const csv = values.get('csv');
  const out = values.get('out');
  if (!csv || !out) {
    throw new Error(USAGE);
  }
  const spec: PlotSpec = {
    ...DEFAULT_SPEC,
    ratio,
    law: values.get('law') ?? null,
    title: values.get('title') ?? null,
  };
  for (const dim of ['width', 'height'] as const) {
    const raw = values.get(dim);
    if (raw !== undefined) {
      const parsed = Number(raw);
      if (!Number.isFinite(parsed) || parsed < 120) {
        throw new Error(`--${dim} must be a number >= 120`);
      }
      spec[dim] = parsed;
    }
  }
  return { csv, out, summary: values.get('summary') ?? null, spec };
}

export function run(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  try {
    const rows = parseResultsCsv(fs.readFileSync(args.csv, 'utf-8'));
    const cells = computeCells(rows);
    let summary: SuiteSummary | null = null;
    if (args.summary) {
      summary = parseSummaryJson(fs.readFileSync(args.summary, 'utf-8'));
      const mismatches = checkAgainstSummary(cells, summary);
      if (mismatches.length > 0) {
        throw new Error(`CSV and summary disagree:\n  ${mismatches.join('\n  ')}`);
      }
    }
    const spec = { ...args.spec };
    if (!spec.law && !spec.ratio && summary?.best_fit) {
      spec.law = summary.best_fit;
    }
    const svg = renderFigure(cells, summary, spec);
    fs.mkdirSync(path.dirname(path.resolve(args.out)), { recursive: true });
    fs.writeFileSync(args.out, svg);
    console.log(`wrote ${args.out} (${cells.length} cells${spec.law ? `, overlay ${spec.law}` : ''})`);
    return 0;
  } catch (err) {
    const prefix = err instanceof SchemaError ? 'schema error' : 'error';
    console.error(`${prefix}: ${(err as Error).message}`);
    return 1;
  }
}

const entry = process.argv[1];
if (entry && (entry.endsWith('cli.js') || entry.endsWith('gplab-plot'))) {
  process.exit(run(process.argv.slice(2)));
}
