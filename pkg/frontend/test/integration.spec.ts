/**
 * End-to-end check against the real scaling-study artifacts left under
 * ../results by the acceptance suite (pytest tests/test_acceptance.py -k a3).
 * Skipped when those files have not been generated yet.
 */

import * as fs from 'fs';
import * as os from 'os';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { run } from '../src/cli.js';
import { parseResultsCsv, parseSummaryJson } from '../src/schema.js';
import { checkAgainstSummary, computeCells } from '../src/series.js';

const RESULTS = path.join(__dirname, '..', '..', 'results');
const CSV = path.join(RESULTS, 'a3_mo-order.csv');
const SUMMARY = path.join(RESULTS, 'a3_mo-order.summary.json');
const available = fs.existsSync(CSV) && fs.existsSync(SUMMARY);

describe.skipIf(!available)('scaling-study artifacts', () => {
  it('recomputed means match the emitted summary to print precision', () => {
    const rows = parseResultsCsv(fs.readFileSync(CSV, 'utf-8'));
    const summary = parseSummaryJson(fs.readFileSync(SUMMARY, 'utf-8'));
    const cells = computeCells(rows);
    expect(checkAgainstSummary(cells, summary)).toEqual([]);
    for (const cell of summary.cells) {
      const mine = cells.find((c) => c.n === cell.n)!;
      expect(mine.mean!.toPrecision(6)).toBe(cell.mean_evaluations!.toPrecision(6));
    }
    expect(summary.best_fit).toBe('n_log_n');
  });

  it('renders the scaling figure for the study', () => {
    const out = path.join(fs.mkdtempSync(path.join(os.tmpdir(), 'gplab-a3-')), 'a3.svg');
    expect(run(['--csv', CSV, '--summary', SUMMARY, '--law', 'n_log_n',
                '--out', out])).toBe(0);
    const svg = fs.readFileSync(out, 'utf-8');
    expect((svg.match(/data-mean=/g) || []).length).toBe(5);
    fs.rmSync(path.dirname(out), { recursive: true, force: true });
  });
});
