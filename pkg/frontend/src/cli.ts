#!/usr/bin/env node
/**
 * plot --csv <path> --panel a|b|both --out <dir> [--linear-x] [--linear-y]
 *
 * Renders the sweep CSV as the two standard panels, one SVG and one PNG each.
 */

import { realpathSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { CsvError } from "./csv.js";
import { render } from "./render.js";

export function main(argv: string[]): number {
  let args;
  try {
    args = parseArgs({
      args: argv,
      options: {
        csv: { type: "string" },
        panel: { type: "string", default: "both" },
        out: { type: "string", default: "plots" },
        "linear-x": { type: "boolean", default: false },
        "linear-y": { type: "boolean", default: false },
        quiet: { type: "boolean", default: false },
      },
    });
  } catch (error) {
    console.error(`argument error: ${(error as Error).message}`);
    return 2;
  }
  const { csv, panel, out } = args.values;
  if (!csv) {
    console.error("missing required --csv <path>");
    return 2;
  }
  if (panel !== "a" && panel !== "b" && panel !== "both") {
    console.error(`--panel must be a, b or both, got ${JSON.stringify(panel)}`);
    return 2;
  }
  try {
    const written = render({
      inputCsv: csv,
      outDir: out!,
      panel,
      logX: !args.values["linear-x"],
      logY: !args.values["linear-y"],
    });
    if (!args.values.quiet) {
      for (const file of written) {
        console.log(`wrote ${file.path} (${file.bytes} bytes)`);
      }
    }
    return 0;
  } catch (error) {
    if (error instanceof CsvError) {
      console.error(`csv error: ${error.message}`);
      return 1;
    }
    if ((error as NodeJS.ErrnoException).code !== undefined) {
      console.error(`i/o error: ${(error as Error).message}`);
      return 3;
    }
    console.error(`error: ${(error as Error).message}`);
    return 1;
  }
}

const entry = process.argv[1];
if (entry !== undefined && import.meta.url === pathToFileURL(realpathSync(entry)).href) {
  process.exit(main(process.argv.slice(2)));
}
