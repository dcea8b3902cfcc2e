#!/usr/bin/env node
import { writeFileSync } from 'fs';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { FigureKind, renderFigure } from './figures';
import { loadRows, PlotterError } from './schema';

export function run(argv: string[]): number {
  const args = yargs(argv)
    .usage('$0 --kind fig1|fig2|fig3 --in <csv> --out <image> [--log-y]')
    .option('kind', { choices: ['fig1', 'fig2', 'fig3'] as const, demandOption: true })
    .option('in', { type: 'string', demandOption: true, describe: 'harness CSV to plot' })
    .option('out', { type: 'string', demandOption: true, describe: 'output SVG path' })
    .option('log-y', { type: 'boolean', default: false, describe: 'log-scale probability axis' })
    .strict()
    .exitProcess(false)
    .fail((msg) => {
      throw new PlotterError(msg);
    })
    .parseSync();

  const rows = loadRows(args.in);
  const svg = renderFigure(args.kind as FigureKind, rows, args['log-y']);
  writeFileSync(args.out, svg);
  console.log(`wrote ${args.out}`);
  return 0;
}

if (require.main === module) {
  try {
    process.exitCode = run(hideBin(process.argv));
  } catch (err) {
    if (err instanceof PlotterError) {
      console.error(`canoma-plot: ${err.message}`);
      process.exitCode = 2;
    } else {
      console.error(`canoma-plot: unexpected error: ${(err as Error).message}`);
      process.exitCode = 1;
    }
  }
}
