import { describe, expect, it } from 'vitest';
import { loadRows, PlotterError, selectSeries } from '../src/schema';
import { HEADER, tempDir, writeCsv } from './helpers';

describe('loadRows', () => {
  it('parses rows with blanks as nulls', () => {
    const dir = tempDir();
    const path = writeCsv(dir, 'ok.csv', [
      HEADER,
      'ca_noma,0.2,20,2,2,0.039687254,0.0397,0.000619,100000,42',
      'oma,,20,2,2,0.139292024,,,,',
    ]);
    const rows = loadRows(path);
    expect(rows).toHaveLength(2);
    expect(rows[0].scheme).toBe('ca_noma');
    expect(rows[0].a).toBeCloseTo(0.2, 12);
    expect(rows[0].seed).toBe(42);
    expect(rows[1].a).toBeNull();
    expect(rows[1].p_empirical).toBeNull();
    expect(selectSeries(rows, 'oma')).toHaveLength(1);
  });

  it('rejects a missing file with a distinct message', () => {
    expect(() => loadRows('/nonexistent/nowhere.csv')).toThrowError(/input file not found/);
  });

  it('rejects a wrong header as a schema mismatch', () => {
    const dir = tempDir();
    const path = writeCsv(dir, 'bad.csv', ['scheme,alpha,snr', 'ca_noma,0.2,20']);
    expect(() => loadRows(path)).toThrowError(/schema mismatch/);
  });

  it('rejects short rows and bad numbers', () => {
    const dir = tempDir();
    const short = writeCsv(dir, 'short.csv', [HEADER, 'ca_noma,0.2,20']);
    expect(() => loadRows(short)).toThrowError(PlotterError);
    const bad = writeCsv(dir, 'nan.csv', [HEADER, 'ca_noma,zz,20,2,2,0.1,,,,']);
    expect(() => loadRows(bad)).toThrowError(/bad numeric value/);
  });

  it('requires snr_db, beta and rate to be present', () => {
    const dir = tempDir();
    const path = writeCsv(dir, 'blank.csv', [HEADER, 'ca_noma,0.2,,2,2,0.1,,,,']);
    expect(() => loadRows(path)).toThrowError(/must not be blank/);
  });
});
