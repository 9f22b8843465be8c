/**
 * Command line: render figure panels from harness CSV outputs.
 *
 *   plot --curves curves1.csv [curves2.csv ...] [--scatter scatter.csv]
 *        [--alphas 0.5,2] --out figure.png
 */

import { readFileSync, writeFileSync } from "node:fs";

import { parseCurvesCsv, parseScatterCsv, SchemaError, type CurveRow, type ScatterRow } from "./csv.js";
import { renderFigure } from "./figure.js";

interface CliArgs {
  curves: string[];
  scatter?: string;
  alphas?: number[];
  out: string;
}

export function parseArgs(argv: string[]): CliArgs {
  if (argv[0] !== "plot") {
    throw new Error(`unknown command "${argv[0] ?? ""}"; expected "plot"`);
  }
  const args: CliArgs = { curves: [], out: "" };
  let i = 1;
  while (i < argv.length) {
    const flag = argv[i];
    const values: string[] = [];
    i += 1;
    while (i < argv.length && !argv[i].startsWith("--")) {
      values.push(argv[i]);
      i += 1;
    }
    switch (flag) {
      case "--curves":
        args.curves.push(...values);
        break;
      case "--scatter":
        if (values.length !== 1) {
          throw new Error("--scatter takes exactly one path");
        }
        args.scatter = values[0];
        break;
      case "--alphas":
        args.alphas = values
          .flatMap((v) => v.split(","))
          .filter((v) => v.length > 0)
          .map(Number);
        break;
      case "--out":
        if (values.length !== 1) {
          throw new Error("--out takes exactly one path");
        }
        args.out = values[0];
        break;
      default:
        throw new Error(`unknown flag "${flag}"`);
    }
  }
  if (args.curves.length === 0 && args.scatter === undefined) {
    throw new Error("at least one input is required (--curves and/or --scatter)");
  }
  if (args.out === "") {
    throw new Error("--out is required");
  }
  return args;
}

export function runCli(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  try {
    const curves: CurveRow[] = args.curves.flatMap((path) =>
      parseCurvesCsv(readFileSync(path, "utf-8"), path),
    );
    const scatter: ScatterRow[] = args.scatter
      ? parseScatterCsv(readFileSync(args.scatter, "utf-8"), args.scatter)
      : [];
    const figure = renderFigure(curves, scatter, { alphaPanels: args.alphas });
    writeFileSync(args.out, figure.png);
    console.log(
      `wrote ${figure.width}x${figure.height} figure with panels [${figure.panels.join(", ")}] to ${args.out}`,
    );
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 3;
    }
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly = process.argv[1]?.endsWith("index.js") ?? false;
if (invokedDirectly) {
  process.exit(runCli(process.argv.slice(2)));
}
