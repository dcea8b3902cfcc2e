/**
 * Minimal deterministic SVG scene builder for line charts.
 *
 * Every series element carries the original data values in `data-x`/`data-y`
 * attributes so the plotted series can be inspected from the file itself,
 * independent of pixel geometry.
 */

export interface Scale {
  toPixel(v: number): number;
  ticks(): number[];
  readonly log: boolean;
}

export function linearScale(lo: number, hi: number, pxLo: number, pxHi: number): Scale {
  const span = hi - lo || 1;
  return {
    log: false,
    toPixel: (v) => pxLo + ((v - lo) / span) * (pxHi - pxLo),
    ticks: () => niceTicks(lo, hi),
  };
}

export function logScale(lo: number, hi: number, pxLo: number, pxHi: number): Scale {
  const a = Math.log10(lo);
  const span = Math.log10(hi) - a || 1;
  return {
    log: true,
    toPixel: (v) => pxLo + ((Math.log10(v) - a) / span) * (pxHi - pxLo),
    ticks: () => {
      const out: number[] = [];
      for (let e = Math.ceil(a); e <= Math.floor(Math.log10(hi)) + 1e-9; e++) out.push(10 ** e);
      return out;
    },
  };
}

function niceTicks(lo: number, hi: number, maxTicks = 8): number[] {
  const raw = (hi - lo) / Math.max(maxTicks - 1, 1);
  const mag = 10 ** Math.floor(Math.log10(raw || 1));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => (hi - lo) / s <= maxTicks - 1) ?? mag * 10;
  const out: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : Number(t.toPrecision(12)));
  }
  return out;
}

const esc = (s: string) => s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');
const fmt = (v: number) => Number(v.toPrecision(9)).toString();

export interface SeriesStyle {
  color: string;
  dash?: string;
  marker?: boolean;
  line?: boolean;
}

export class Chart {
  readonly width = 720;
  readonly height = 480;
  readonly margin = { left: 72, right: 24, top: 36, bottom: 56 };
  private body: string[] = [];
  private legend: string[] = [];
  private x!: Scale;
  private y!: Scale;

  constructor(
    readonly title: string,
    readonly xLabel: string,
    readonly yLabel: string,
  ) {}

  setScales(x: Scale, y: Scale): void {
    this.x = x;
    this.y = y;
    const { left, right, top, bottom } = this.margin;
    const [x0, x1, y0, y1] = [left, this.width - right, this.height - bottom, top];
    this.body.push(`<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" class="frame" fill="none" stroke="#444"/>`);
    for (const t of x.ticks()) {
      const px = x.toPixel(t);
      if (px < x0 - 1e-6 || px > x1 + 1e-6) continue;
      this.body.push(`<line x1="${fmt(px)}" y1="${y0}" x2="${fmt(px)}" y2="${y0 + 5}" stroke="#444"/>`);
      this.body.push(`<text x="${fmt(px)}" y="${y0 + 20}" text-anchor="middle" class="tick">${fmt(t)}</text>`);
    }
    for (const t of y.ticks()) {
      const py = y.toPixel(t);
      if (py < y1 - 1e-6 || py > y0 + 1e-6) continue;
      this.body.push(`<line x1="${x0 - 5}" y1="${fmt(py)}" x2="${x0}" y2="${fmt(py)}" stroke="#444"/>`);
      this.body.push(`<text x="${x0 - 8}" y="${fmt(py + 4)}" text-anchor="end" class="tick">${fmt(t)}</text>`);
    }
    this.body.push(`<text x="${(x0 + x1) / 2}" y="${this.height - 14}" text-anchor="middle" class="axis-label">${esc(this.xLabel)}</text>`);
    this.body.push(`<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" class="axis-label" transform="rotate(-90 18 ${(y0 + y1) / 2})">${esc(this.yLabel)}</text>`);
    this.body.push(`<text x="${(x0 + x1) / 2}" y="22" text-anchor="middle" class="title">${esc(this.title)}</text>`);
  }

  /** Polyline through (xs, ys); original data embedded in data attributes. */
  addLine(name: string, xs: number[], ys: number[], style: SeriesStyle): void {
    const pts = xs.map((v, i) => `${fmt(this.x.toPixel(v))},${fmt(this.y.toPixel(ys[i]))}`).join(' ');
    const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : '';
    this.body.push(
      `<polyline class="series-line" data-series="${esc(name)}" data-x="${xs.map(fmt).join(',')}" ` +
        `data-y="${ys.map(fmt).join(',')}" fill="none" stroke="${style.color}" stroke-width="1.8"${dash} points="${pts}"/>`,
    );
    this.legend.push(`<tspan fill="${style.color}">&#9632;</tspan> ${esc(name)}`);
  }

  /** Circular markers, optionally with vertical error bars of half-length err[i]. */
  addPoints(name: string, xs: number[], ys: number[], errs: (number | null)[] | null, color: string): void {
    const parts: string[] = [];
    xs.forEach((v, i) => {
      const px = fmt(this.x.toPixel(v));
      const py = this.y.toPixel(ys[i]);
      const err = errs ? errs[i] : null;
      if (err !== null && err !== undefined && err > 0) {
        const yLo = this.y.log ? Math.max(ys[i] - err, ys[i] / 10) : ys[i] - err;
        parts.push(
          `<line class="errorbar" x1="${px}" y1="${fmt(this.y.toPixel(yLo))}" x2="${px}" y2="${fmt(this.y.toPixel(ys[i] + err))}" stroke="${color}" stroke-width="1"/>`,
        );
      }
      parts.push(`<circle cx="${px}" cy="${fmt(py)}" r="3" fill="${color}"/>`);
    });
    this.body.push(
      `<g class="series-points" data-series="${esc(name)}" data-x="${xs.map(fmt).join(',')}" ` +
        `data-y="${ys.map(fmt).join(',')}">${parts.join('')}</g>`,
    );
    this.legend.push(`<tspan fill="${color}">&#9679;</tspan> ${esc(name)}`);
  }

  addVerticalMarker(role: string, xValue: number, color = '#999'): void {
    const px = fmt(this.x.toPixel(xValue));
    this.body.push(
      `<line class="marker" data-role="${esc(role)}" data-x="${fmt(xValue)}" x1="${px}" x2="${px}" ` +
        `y1="${this.margin.top}" y2="${this.height - this.margin.bottom}" stroke="${color}" stroke-dasharray="4 3"/>`,
    );
  }

  addHorizontalMarker(role: string, yValue: number, color = '#999'): void {
    const py = fmt(this.y.toPixel(yValue));
    this.body.push(
      `<line class="marker" data-role="${esc(role)}" data-y="${fmt(yValue)}" y1="${py}" y2="${py}" ` +
        `x1="${this.margin.left}" x2="${this.width - this.margin.right}" stroke="${color}" stroke-dasharray="4 3"/>`,
    );
  }

  render(): string {
    const legendText = this.legend
      .map((item, i) => `<text x="${this.width - this.margin.right - 8}" y="${this.margin.top + 16 + 16 * i}" text-anchor="end" class="legend">${item}</text>`)
      .join('\n  ');
    return [
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">`,
      `  <style>text{font-family:sans-serif}.tick{font-size:11px}.axis-label{font-size:13px}.title{font-size:14px;font-weight:bold}.legend{font-size:12px}</style>`,
      `  <rect width="${this.width}" height="${this.height}" fill="white"/>`,
      `  ${this.body.join('\n  ')}`,
      `  ${legendText}`,
      `</svg>`,
      ``,
    ].join('\n');
  }
}
