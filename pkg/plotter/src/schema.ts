import { existsSync, readFileSync } from 'fs';
import { parse } from 'papaparse';

/** One harness sweep record; null mirrors a blank CSV cell. */
export interface SweepRow {
  scheme: string;
  a: number | null;
  snr_db: number;
  beta: number;
  rate_bps_hz: number;
  p_analytic: number | null;
  p_empirical: number | null;
  se: number | null;
  n_samples: number | null;
  seed: number | null;
}

export const CSV_COLUMNS = [
  'scheme',
  'a',
  'snr_db',
  'beta',
  'rate_bps_hz',
  'p_analytic',
  'p_empirical',
  'se',
  'n_samples',
  'seed',
] as const;

export class PlotterError extends Error {}

function numberOrNull(column: string, cell: string, line: number): number | null {
  if (cell === '') return null;
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new PlotterError(`line ${line}: bad numeric value for ${column}: '${cell}'`);
  }
  return value;
}

function required(column: string, value: number | null, line: number): number {
  if (value === null) {
    throw new PlotterError(`line ${line}: column ${column} must not be blank`);
  }
  return value;
}

/** Load and validate a harness CSV; the header must match the schema exactly. */
export function loadRows(path: string): SweepRow[] {
  if (!existsSync(path)) {
    throw new PlotterError(`input file not found: ${path}`);
  }
  const text = readFileSync(path, 'utf8');
  const parsed = parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new PlotterError(`cannot parse ${path}: ${parsed.errors[0].message}`);
  }
  const [header, ...lines] = parsed.data;
  if (!header || header.join(',') !== CSV_COLUMNS.join(',')) {
    throw new PlotterError(
      `schema mismatch in ${path}: expected header '${CSV_COLUMNS.join(',')}', ` +
        `got '${(header ?? []).join(',')}'`,
    );
  }
  return lines.map((cells, i) => {
    const line = i + 2;
    if (cells.length !== CSV_COLUMNS.length) {
      throw new PlotterError(`line ${line}: expected ${CSV_COLUMNS.length} cells, got ${cells.length}`);
    }
    const [scheme, a, snrDb, beta, rate, pAnalytic, pEmpirical, se, nSamples, seed] = cells;
    if (scheme === '') throw new PlotterError(`line ${line}: blank scheme`);
    return {
      scheme,
      a: numberOrNull('a', a, line),
      snr_db: required('snr_db', numberOrNull('snr_db', snrDb, line), line),
      beta: required('beta', numberOrNull('beta', beta, line), line),
      rate_bps_hz: required('rate_bps_hz', numberOrNull('rate_bps_hz', rate, line), line),
      p_analytic: numberOrNull('p_analytic', pAnalytic, line),
      p_empirical: numberOrNull('p_empirical', pEmpirical, line),
      se: numberOrNull('se', se, line),
      n_samples: numberOrNull('n_samples', nSamples, line),
      seed: numberOrNull('seed', seed, line),
    };
  });
}

/** Rows of one series, in file order. */
export function selectSeries(rows: SweepRow[], scheme: string): SweepRow[] {
  return rows.filter((r) => r.scheme === scheme);
}
