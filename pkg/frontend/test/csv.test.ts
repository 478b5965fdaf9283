import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { CsvError, okRows, parseSweepCsv, seriesPoints } from "../src/csv.js";

const FIXTURE = join(__dirname, "..", "testdata", "default_sweep.csv");
const fixtureText = readFileSync(FIXTURE, "utf-8");

describe("parseSweepCsv", () => {
  it("parses the reference sweep without loss", () => {
    const rows = parseSweepCsv(fixtureText);
    expect(rows).toHaveLength(50);
    const first = rows[0]!;
    expect(first.status).toBe("ok");
    expect(first.values.get("inv_sigma2")).toBeCloseTo(1e5, 0);
    // 17-digit scientific notation survives the Number round-trip
    const cell = fixtureText.split("\n")[1]!.split(",")[2]!;
    expect(first.values.get("arl_closed")).toBe(Number(cell));
  });

  it("keeps empty root fields as null", () => {
    const rows = parseSweepCsv(fixtureText);
    expect(rows[0]!.values.get("root_R_3")).toBeNull();
    expect(rows[0]!.values.get("root_R_4")).toBeNull();
  });

  it("names missing columns", () => {
    const broken = fixtureText.replace("arl_low_noise", "arl_something");
    expect(() => parseSweepCsv(broken)).toThrow(/missing required column: arl_low_noise/);
  });

  it("rejects unexpected columns", () => {
    const lines = fixtureText.split("\n");
    lines[0] += ",extra";
    const padded = lines
      .map((line, i) => (line.length > 0 && i > 0 ? line + "," : line))
      .join("\n");
    expect(() => parseSweepCsv(padded)).toThrow(/unexpected column/);
  });

  it("rejects empty and too-small inputs", () => {
    expect(() => parseSweepCsv("")).toThrow(CsvError);
    const headerOnly = fixtureText.split("\n").slice(0, 2).join("\n") + "\n";
    expect(() => parseSweepCsv(headerOnly)).toThrow(/at least 2 data rows/);
  });

  it("rejects garbage cells", () => {
    const corrupted = fixtureText.replace(/1\.42586260701380707e-05/, "not-a-number");
    expect(() => parseSweepCsv(corrupted)).toThrow(/unparsable/);
  });
});

describe("row filtering and series extraction", () => {
  it("excludes rows whose status is not ok", () => {
    const lines = fixtureText.trimEnd().split("\n");
    const tampered = lines[1]!.replace(/ok$/, "negative_discriminant");
    const text = [lines[0], tampered, ...lines.slice(2)].join("\n") + "\n";
    const rows = parseSweepCsv(text);
    expect(okRows(rows)).toHaveLength(49);
  });

  it("skips empty cells when building series", () => {
    const rows = parseSweepCsv(fixtureText);
    expect(seriesPoints(rows, "root_R_1")).toHaveLength(50);
    expect(seriesPoints(rows, "root_R_3")).toHaveLength(0);
  });
});
