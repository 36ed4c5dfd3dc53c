import * as fs from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { parseResultsCsv, parseSummaryJson } from '../src/schema.js';
import { computeCells } from '../src/series.js';
import { DEFAULT_SPEC, renderFigure } from '../src/svg.js';

const FIXTURES = path.join(__dirname, 'fixtures');
const rows = parseResultsCsv(fs.readFileSync(path.join(FIXTURES, 'scaling.csv'), 'utf-8'));
const summary = parseSummaryJson(
  fs.readFileSync(path.join(FIXTURES, 'scaling.summary.json'), 'utf-8'));
const cells = computeCells(rows);

function plottedMeans(svg: string): Map<number, number> {
  const means = new Map<number, number>();
  for (const match of svg.matchAll(/data-n="(\d+)" data-t-init="\d+" data-mean="([^"]+)"/g)) {
    means.set(Number(match[1]), Number(match[2]));
  }
  return means;
}

describe('scaling figure', () => {
  const svg = renderFigure(cells, summary, { ...DEFAULT_SPEC, law: 'n_log_n' });

  it('is a standalone SVG document', () => {
    expect(svg.startsWith('<svg xmlns="http://www.w3.org/2000/svg"')).toBe(true);
    expect(svg.trimEnd().endsWith('</svg>')).toBe(true);
  });

  it('plots exactly the summary means', () => {
    const means = plottedMeans(svg);
    expect(means.size).toBe(summary.cells.length);
    for (const cell of summary.cells) {
      expect(means.get(cell.n)).toBeCloseTo(cell.mean_evaluations!, 9);
      expect(means.get(cell.n)!.toPrecision(6))
        .toBe(cell.mean_evaluations!.toPrecision(6));
    }
  });

  it('draws points, error bars and the overlay', () => {
    expect((svg.match(/<circle/g) || []).length).toBeGreaterThanOrEqual(cells.length);
    expect(svg).toContain('polyline');
    expect(svg).toContain('stroke-dasharray');
    expect(svg).toContain('standard error');
  });

  it('is deterministic', () => {
    const again = renderFigure(cells, summary, { ...DEFAULT_SPEC, law: 'n_log_n' });
    expect(again).toBe(svg);
  });
});

describe('ratio figure', () => {
  it('renders mean / g(n) with the fitted constant line', () => {
    const svg = renderFigure(cells, summary,
      { ...DEFAULT_SPEC, law: 'n_log_n', ratio: true });
    expect(svg).toContain('fitted constant');
    expect(plottedMeans(svg).size).toBe(summary.cells.length);
  });

  it('needs a law', () => {
    expect(() => renderFigure(cells, summary, { ...DEFAULT_SPEC, ratio: true }))
      .toThrow(/needs --law/);
  });
});

describe('failure modes', () => {
  it('rejects unknown laws', () => {
    expect(() => renderFigure(cells, summary, { ...DEFAULT_SPEC, law: 'n4' }))
      .toThrow(/unknown growth law/);
  });

  it('refuses to plot when no cell succeeded', () => {
    const empty = cells.map((c) => ({ ...c, mean: null, std: null, stderr: null }));
    expect(() => renderFigure(empty, summary, DEFAULT_SPEC)).toThrow(/nothing to plot/);
  });
});
