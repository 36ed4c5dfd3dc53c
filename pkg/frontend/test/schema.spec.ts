import * as fs from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { CSV_HEADER, parseResultsCsv, parseSummaryJson, SchemaError } from '../src/schema.js';

const FIXTURES = path.join(__dirname, 'fixtures');
const csvText = fs.readFileSync(path.join(FIXTURES, 'scaling.csv'), 'utf-8');
const summaryText = fs.readFileSync(path.join(FIXTURES, 'scaling.summary.json'), 'utf-8');

describe('results CSV parsing', () => {
  it('parses the fixture produced by the harness', () => {
    const rows = parseResultsCsv(csvText);
    expect(rows.length).toBe(24); // 4 cells x 6 trials
    expect(rows[0].problem).toBe('mo-order');
    expect(rows[0].algo).toBe('gp_single');
    expect(new Set(rows.map((r) => r.n))).toEqual(new Set([8, 12, 16, 24]));
    expect(rows.every((r) => r.evaluations > 0)).toBe(true);
    expect(rows.every((r) => typeof r.success === 'boolean')).toBe(true);
  });

  it('keeps 64-bit seeds exact by leaving them as strings', () => {
    const rows = parseResultsCsv(csvText);
    for (const row of rows) {
      expect(row.seed).toMatch(/^\d+$/);
    }
    const big = rows.find((r) => r.seed.length >= 16);
    expect(big).toBeDefined(); // derived seeds are 64-bit; precision would be lost as numbers
  });

  it('rejects a wrong header', () => {
    const mangled = csvText.replace('problem,', 'task,');
    expect(() => parseResultsCsv(mangled)).toThrow(SchemaError);
    expect(() => parseResultsCsv(mangled)).toThrow(/unexpected CSV header/);
  });

  it('rejects empty input and header-only input', () => {
    expect(() => parseResultsCsv('')).toThrow(/empty CSV/);
    expect(() => parseResultsCsv(CSV_HEADER.join(',') + '\n')).toThrow(/no data rows/);
  });

  it('rejects malformed rows', () => {
    const lines = csvText.trimEnd().split('\n');
    expect(() => parseResultsCsv([lines[0], 'short,row'].join('\n'))).toThrow(/expected 12 fields/);
    const bad = lines[1].split(',');
    bad[8] = 'many';
    expect(() => parseResultsCsv([lines[0], bad.join(',')].join('\n'))).toThrow(/not an integer/);
    bad[8] = '10';
    bad[9] = '2';
    expect(() => parseResultsCsv([lines[0], bad.join(',')].join('\n'))).toThrow(/success/);
  });
});

describe('summary JSON parsing', () => {
  it('parses the fixture summary', () => {
    const summary = parseSummaryJson(summaryText);
    expect(summary.problem).toBe('mo-order');
    expect(summary.cells.length).toBe(4);
    expect(summary.fits.length).toBeGreaterThan(0);
    expect(summary.best_fit).toBeTruthy();
  });

  it('rejects junk', () => {
    expect(() => parseSummaryJson('not json')).toThrow(SchemaError);
    expect(() => parseSummaryJson('{"cells": 3}')).toThrow(/cells array/);
    expect(() => parseSummaryJson('{"cells": [{"n": "x"}]}')).toThrow(/numeric field/);
  });
});
