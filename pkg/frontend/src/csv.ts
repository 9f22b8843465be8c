/**
 * Parsing and schema validation for the harness CSV outputs.
 *
 * The frontend never recomputes entropies: these readers only check that
 * the columns are exactly the ones the numerical package emits and that
 * numeric fields are finite.
 */

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

export interface CurveRow {
  h_in: number;
  delta_h: number;
  family: string;
  alpha: number;
  entropy_kind: string;
}

export interface ScatterRow {
  sample_index: number;
  h_in: number;
  delta_h: number;
  alpha: number;
  entropy_kind: string;
  seed: number;
}

const CURVE_COLUMNS = ["h_in", "delta_h", "family", "alpha", "entropy_kind"];
const SCATTER_COLUMNS = ["sample_index", "h_in", "delta_h", "alpha", "entropy_kind", "seed"];

function splitRows(text: string, path: string): string[][] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${path}: empty CSV`);
  }
  return lines.map((line) => line.split(","));
}

function checkHeader(header: string[], expected: string[], path: string): void {
  for (const column of expected) {
    if (!header.includes(column)) {
      throw new SchemaError(`${path}: missing required column "${column}"`);
    }
  }
  for (const column of header) {
    if (!expected.includes(column)) {
      throw new SchemaError(`${path}: unexpected column "${column}"`);
    }
  }
}

function numeric(raw: string, column: string, line: number, path: string): number {
  const value = Number(raw);
  if (raw.trim() === "" || !Number.isFinite(value)) {
    throw new SchemaError(`${path}: line ${line}: column "${column}" is not a finite number (got "${raw}")`);
  }
  return value;
}

function parseTable(text: string, expected: string[], path: string): Record<string, string>[] {
  const rows = splitRows(text, path);
  const header = rows[0];
  checkHeader(header, expected, path);
  const out: Record<string, string>[] = [];
  for (let i = 1; i < rows.length; i++) {
    if (rows[i].length !== header.length) {
      throw new SchemaError(`${path}: line ${i + 1}: expected ${header.length} fields, got ${rows[i].length}`);
    }
    const record: Record<string, string> = {};
    header.forEach((column, j) => (record[column] = rows[i][j]));
    out.push(record);
  }
  return out;
}

export function parseCurvesCsv(text: string, path = "curves"): CurveRow[] {
  return parseTable(text, CURVE_COLUMNS, path).map((r, i) => ({
    h_in: numeric(r.h_in, "h_in", i + 2, path),
    delta_h: numeric(r.delta_h, "delta_h", i + 2, path),
    family: r.family,
    alpha: numeric(r.alpha, "alpha", i + 2, path),
    entropy_kind: r.entropy_kind,
  }));
}

export function parseScatterCsv(text: string, path = "scatter"): ScatterRow[] {
  return parseTable(text, SCATTER_COLUMNS, path).map((r, i) => ({
    sample_index: numeric(r.sample_index, "sample_index", i + 2, path),
    h_in: numeric(r.h_in, "h_in", i + 2, path),
    delta_h: numeric(r.delta_h, "delta_h", i + 2, path),
    alpha: numeric(r.alpha, "alpha", i + 2, path),
    entropy_kind: r.entropy_kind,
    seed: numeric(r.seed, "seed", i + 2, path),
  }));
}
