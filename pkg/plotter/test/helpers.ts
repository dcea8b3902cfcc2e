import { mkdtempSync, writeFileSync } from 'fs';
import { tmpdir } from 'os';
import { join } from 'path';

export function tempDir(): string {
  return mkdtempSync(join(tmpdir(), 'canoma-plotter-'));
}

export function writeCsv(dir: string, name: string, lines: string[]): string {
  const path = join(dir, name);
  writeFileSync(path, lines.join('\n') + '\n');
  return path;
}

export const HEADER = 'scheme,a,snr_db,beta,rate_bps_hz,p_analytic,p_empirical,se,n_samples,seed';

export interface Series {
  x: number[];
  y: number[];
}

/** Pull every data-carrying series element out of an SVG string. */
export function parseSeries(svg: string): Record<string, Series> {
  const out: Record<string, Series> = {};
  const pattern = /data-series="([^"]+)" data-x="([^"]*)" data-y="([^"]*)"/g;
  for (const match of svg.matchAll(pattern)) {
    const [, name, xs, ys] = match;
    out[name] = {
      x: xs === '' ? [] : xs.split(',').map(Number),
      y: ys === '' ? [] : ys.split(',').map(Number),
    };
  }
  return out;
}

export function parseMarkers(svg: string): Record<string, number> {
  const out: Record<string, number> = {};
  const pattern = /class="marker" data-role="([^"]+)" data-([xy])="([^"]+)"/g;
  for (const match of svg.matchAll(pattern)) {
    out[match[1]] = Number(match[3]);
  }
  return out;
}
