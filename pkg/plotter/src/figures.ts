import { PlotterError, selectSeries, SweepRow } from './schema';
import { Chart, linearScale, logScale } from './svg';

export type FigureKind = 'fig1' | 'fig2' | 'fig3';

export interface PlotSpec {
  kind: FigureKind;
  input: string;
  output: string;
  logY: boolean;
}

const COLORS: Record<string, string> = {
  ca_noma: '#1464c8',
  noma: '#c85014',
  oma: '#3c8c3c',
  amin_closed: '#1464c8',
  amin_numeric: '#c85014',
};

function pick(rows: SweepRow[], scheme: string, column: keyof SweepRow, context: string): number[] {
  return rows.map((r) => {
    const v = r[column];
    if (v === null || typeof v !== 'number') {
      throw new PlotterError(`${context}: column ${String(column)} must be populated for series '${scheme}'`);
    }
    return v;
  });
}

function requireSeries(rows: SweepRow[], scheme: string, kind: FigureKind): SweepRow[] {
  const series = selectSeries(rows, scheme);
  if (series.length === 0) {
    throw new PlotterError(`empty selection: no rows for scheme '${scheme}' (required by ${kind})`);
  }
  return series;
}

/** Union outage vs power split: analytic line, empirical points with 3*se bars. */
export function renderFig1(rows: SweepRow[], logY: boolean): string {
  const union = requireSeries(rows, 'ca_noma', 'fig1');
  const a = pick(union, 'ca_noma', 'a', 'fig1');
  const analytic = pick(union, 'ca_noma', 'p_analytic', 'fig1');
  const empirical = pick(union, 'ca_noma', 'p_empirical', 'fig1');
  const bars = union.map((r) => (r.se === null ? null : 3 * r.se));
  const rate = union[0].rate_bps_hz;
  const cap = 1 / (1 + 2 ** rate);
  const limit = 2 ** -rate;

  const chart = new Chart('union outage vs power split', 'a', 'union-outage probability');
  const xs = linearScale(0, Math.max(...a) * 1.02, chart.margin.left, chart.width - chart.margin.right);
  const positives = analytic.concat(empirical).filter((v) => v > 0);
  const ys = logY
    ? logScale(Math.min(...positives) * 0.8, 1.0, chart.height - chart.margin.bottom, chart.margin.top)
    : linearScale(0, 1.02, chart.height - chart.margin.bottom, chart.margin.top);
  chart.setScales(xs, ys);
  chart.addVerticalMarker('cap', cap);
  chart.addVerticalMarker('sic-limit', limit);
  if (logY) {
    const keep = empirical.map((v) => v > 0);
    chart.addLine('ca_noma analytic', a, analytic, { color: COLORS.ca_noma });
    chart.addPoints(
      'ca_noma empirical',
      a.filter((_, i) => keep[i]),
      empirical.filter((_, i) => keep[i]),
      bars.filter((_, i) => keep[i]),
      COLORS.ca_noma,
    );
  } else {
    chart.addLine('ca_noma analytic', a, analytic, { color: COLORS.ca_noma });
    chart.addPoints('ca_noma empirical', a, empirical, bars, COLORS.ca_noma);
  }
  return chart.render();
}

/** Scheme comparison vs SNR; the probability axis is logarithmic. */
export function renderFig2(rows: SweepRow[]): string {
  const schemes = ['ca_noma', 'noma', 'oma'];
  const series = schemes.map((s) => requireSeries(rows, s, 'fig2'));
  const allValues: number[] = [];
  for (const s of series) {
    for (const r of s) {
      if (r.p_analytic !== null && r.p_analytic > 0) allValues.push(r.p_analytic);
      if (r.p_empirical !== null && r.p_empirical > 0) allValues.push(r.p_empirical);
    }
  }
  if (allValues.length === 0) {
    throw new PlotterError('empty selection: no positive probabilities to draw on a log axis');
  }
  const dbs = series.flatMap((s) => s.map((r) => r.snr_db));

  const chart = new Chart('union outage vs transmit SNR', 'transmit SNR (dB)', 'union-outage probability');
  const xs = linearScale(Math.min(...dbs), Math.max(...dbs), chart.margin.left, chart.width - chart.margin.right);
  const ys = logScale(Math.min(...allValues) * 0.8, 1.0, chart.height - chart.margin.bottom, chart.margin.top);
  chart.setScales(xs, ys);
  schemes.forEach((scheme, i) => {
    const s = series[i];
    const db = s.map((r) => r.snr_db);
    const analytic = pick(s, scheme, 'p_analytic', 'fig2');
    chart.addLine(`${scheme} analytic`, db, analytic, { color: COLORS[scheme] });
    const havePoints = s.filter((r) => r.p_empirical !== null && r.p_empirical > 0);
    if (havePoints.length > 0) {
      chart.addPoints(
        `${scheme} empirical`,
        havePoints.map((r) => r.snr_db),
        havePoints.map((r) => r.p_empirical as number),
        havePoints.map((r) => (r.se === null ? null : 3 * r.se)),
        COLORS[scheme],
      );
    }
  });
  return chart.render();
}

/** Closed-form vs numeric optimal split across SNR, with the cap marked. */
export function renderFig3(rows: SweepRow[]): string {
  const closed = requireSeries(rows, 'amin_closed', 'fig3');
  const numeric = requireSeries(rows, 'amin_numeric', 'fig3');
  const rate = closed[0].rate_bps_hz;
  const cap = 1 / (1 + 2 ** rate);

  const chart = new Chart('outage-minimizing power split vs transmit SNR', 'transmit SNR (dB)', 'optimal power split a');
  const dbs = closed.map((r) => r.snr_db).concat(numeric.map((r) => r.snr_db));
  const xs = linearScale(Math.min(...dbs), Math.max(...dbs), chart.margin.left, chart.width - chart.margin.right);
  const ys = linearScale(0, Math.max(cap * 1.25, 0.25), chart.height - chart.margin.bottom, chart.margin.top);
  chart.setScales(xs, ys);
  chart.addHorizontalMarker('cap', cap);
  chart.addLine(
    'amin_closed',
    closed.map((r) => r.snr_db),
    pick(closed, 'amin_closed', 'a', 'fig3'),
    { color: COLORS.amin_closed },
  );
  chart.addLine(
    'amin_numeric',
    numeric.map((r) => r.snr_db),
    pick(numeric, 'amin_numeric', 'a', 'fig3'),
    { color: COLORS.amin_numeric, dash: '6 3' },
  );
  return chart.render();
}

export function renderFigure(kind: FigureKind, rows: SweepRow[], logY: boolean): string {
  switch (kind) {
    case 'fig1':
      return renderFig1(rows, logY);
    case 'fig2':
      return renderFig2(rows);
    case 'fig3':
      return renderFig3(rows);
  }
}
