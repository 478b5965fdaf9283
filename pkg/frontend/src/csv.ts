/** Sweep-CSV ingestion: strict column contract, status filtering. */

export const REQUIRED_COLUMNS = [
  "inv_sigma2",
  "sigma2",
  "arl_closed",
  "arl_low_noise",
  "arl_numeric",
  "root_R_1",
  "root_R_2",
  "root_R_3",
  "root_R_4",
  "root_Rp_1",
  "root_Rp_2",
  "discriminant",
  "status",
] as const;

export type ColumnName = (typeof REQUIRED_COLUMNS)[number];

/** One sweep row; numeric cells are null when the field was empty. */
export interface SweepRow {
  values: Map<string, number | null>;
  status: string;
}

export class CsvError extends Error {}

function parseCell(cell: string): number | null {
  if (cell === "") return null;
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new CsvError(`unparsable numeric cell: ${JSON.stringify(cell)}`);
  }
  return value;
}

/**
 * Parse sweep CSV text. The header must contain exactly the columns the
 * sweep writer emits; anything else is a contract violation worth failing
 * loudly on.
 */
export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError("empty CSV input");
  }
  const header = lines[0]!.split(",");
  for (const column of REQUIRED_COLUMNS) {
    if (!header.includes(column)) {
      throw new CsvError(`missing required column: ${column}`);
    }
  }
  for (const column of header) {
    if (!(REQUIRED_COLUMNS as readonly string[]).includes(column)) {
      throw new CsvError(`unexpected column: ${column}`);
    }
  }
  const statusIndex = header.indexOf("status");
  const rows: SweepRow[] = [];
  for (const line of lines.slice(1)) {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new CsvError(
        `row has ${cells.length} cells, header has ${header.length}`,
      );
    }
    const values = new Map<string, number | null>();
    for (let i = 0; i < header.length; i++) {
      if (i === statusIndex) continue;
      values.set(header[i]!, parseCell(cells[i]!));
    }
    rows.push({ values, status: cells[statusIndex]! });
  }
  if (rows.length < 2) {
    throw new CsvError(`need at least 2 data rows, got ${rows.length}`);
  }
  return rows;
}

/** Rows whose solver status is "ok"; everything else is excluded from curves. */
export function okRows(rows: SweepRow[]): SweepRow[] {
  return rows.filter((row) => row.status === "ok");
}

/** (x, y) pairs of one column vs inv_sigma2, skipping empty cells. */
export function seriesPoints(
  rows: SweepRow[],
  column: ColumnName,
): { x: number; y: number }[] {
  const points: { x: number; y: number }[] = [];
  for (const row of rows) {
    const x = row.values.get("inv_sigma2");
    const y = row.values.get(column);
    if (x !== null && x !== undefined && y !== null && y !== undefined) {
      points.push({ x, y });
    }
  }
  return points;
}
