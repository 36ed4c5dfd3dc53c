/**
 * File-format layer: the raw results CSV and the summary JSON emitted
 * by the experiment harness. Parsing is strict — a wrong header or a
 * malformed row is an error, not a guess.
 */

export const CSV_HEADER = [
  'problem', 'algo', 'selection', 'mode', 'n', 't_init', 'weight_family',
  'seed', 'evaluations', 'success', 'max_tree_size', 'final_pop_size',
] as const;

export interface TrialRow {
  problem: string;
  algo: string;
  selection: string;
  mode: string;
  n: number;
  tInit: number;
  weightFamily: string;
  /** kept as a string: derived seeds exceed 2^53 */
  seed: string;
  evaluations: number;
  success: boolean;
  maxTreeSize: number;
  finalPopSize: number;
}

export interface SummaryCell {
  n: number;
  init_size: number | null;
  t_init: number;
  trials: number;
  successes: number;
  success_rate: number;
  mean_evaluations: number | null;
  median_evaluations: number | null;
  std_evaluations: number | null;
  max_tree_size: number;
}

export interface GrowthFit {
  candidate: string;
  constant: number;
  ratio_spread: number;
  ratios: Record<string, number>;
}

export interface SuiteSummary {
  problem: string;
  algo: string;
  selection: string;
  mode: string;
  weight_family: string;
  trials: number;
  budget: number;
  master_seed: number;
  cells: SummaryCell[];
  fits: GrowthFit[];
  best_fit: string | null;
}

export class SchemaError extends Error {}

function parseIntStrict(field: string, value: string, line: number): number {
  if (!/^-?\d+$/.test(value)) {
    throw new SchemaError(`line ${line}: field ${field} is not an integer: '${value}'`);
  }
  return Number(value);
}

/** Parse the harness's raw results CSV (plain values, no quoting). */
export function parseResultsCsv(text: string): TrialRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError('empty CSV: no header line');
  }
  const header = lines[0].split(',');
  if (header.length !== CSV_HEADER.length ||
      header.some((h, i) => h !== CSV_HEADER[i])) {
    throw new SchemaError(
      `unexpected CSV header: got '${lines[0]}', expected '${CSV_HEADER.join(',')}'`);
  }
  if (lines.length === 1) {
    throw new SchemaError('empty CSV: header but no data rows');
  }
  const rows: TrialRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(',');
    if (parts.length !== CSV_HEADER.length) {
      throw new SchemaError(`line ${i + 1}: expected ${CSV_HEADER.length} fields, got ${parts.length}`);
    }
    const success = parts[9];
    if (success !== '0' && success !== '1') {
      throw new SchemaError(`line ${i + 1}: success must be 0 or 1, got '${success}'`);
    }
    rows.push({
      problem: parts[0],
      algo: parts[1],
      selection: parts[2],
      mode: parts[3],
      n: parseIntStrict('n', parts[4], i + 1),
      tInit: parseIntStrict('t_init', parts[5], i + 1),
      weightFamily: parts[6],
      seed: parts[7],
      evaluations: parseIntStrict('evaluations', parts[8], i + 1),
      success: success === '1',
      maxTreeSize: parseIntStrict('max_tree_size', parts[10], i + 1),
      finalPopSize: parseIntStrict('final_pop_size', parts[11], i + 1),
    });
  }
  return rows;
}

/** Parse and minimally validate a summary JSON document. */
export function parseSummaryJson(text: string): SuiteSummary {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new SchemaError(`summary is not valid JSON: ${(err as Error).message}`);
  }
  const doc = data as Record<string, unknown>;
  if (typeof doc !== 'object' || doc === null || !Array.isArray(doc.cells)) {
    throw new SchemaError('summary JSON lacks a cells array');
  }
  for (const cell of doc.cells as Record<string, unknown>[]) {
    for (const field of ['n', 't_init', 'trials', 'successes', 'success_rate']) {
      if (typeof cell[field] !== 'number') {
        throw new SchemaError(`summary cell lacks numeric field '${field}'`);
      }
    }
  }
  return doc as unknown as SuiteSummary;
}
