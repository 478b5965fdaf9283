/** The two standard panels: which columns they draw and their fixed labels. */

import type { ColumnName } from "./csv.js";

export interface SeriesSpec {
  column: ColumnName;
  label: string;
  color: string;
  marker: boolean;
}

export interface PanelSpec {
  id: "a" | "b";
  title: string;
  xLabel: string;
  yLabel: string;
  series: SeriesSpec[];
}

export const PANEL_A: PanelSpec = {
  id: "a",
  title: "Positive roots of R and R' vs inverse noise power",
  xLabel: "1/sigma2",
  yLabel: "separation (rad)",
  series: [
    { column: "root_R_1", label: "R root 1", color: "#1f77b4", marker: true },
    { column: "root_R_2", label: "R root 2", color: "#aec7e8", marker: true },
    { column: "root_R_3", label: "R root 3", color: "#9edae5", marker: true },
    { column: "root_R_4", label: "R root 4", color: "#17becf", marker: true },
    { column: "root_Rp_1", label: "R' root 1", color: "#2ca02c", marker: true },
    { column: "root_Rp_2", label: "R' root 2", color: "#98df8a", marker: true },
    { column: "arl_closed", label: "ARL (closed form)", color: "#d62728", marker: false },
  ],
};

export const PANEL_B: PanelSpec = {
  id: "b",
  title: "Closed-form ARL vs low-noise approximation",
  xLabel: "1/sigma2",
  yLabel: "separation (rad)",
  series: [
    { column: "arl_closed", label: "ARL (closed form)", color: "#d62728", marker: false },
    { column: "arl_low_noise", label: "ARL (low-noise approx)", color: "#1f77b4", marker: true },
  ],
};

export function panelsFor(selector: "a" | "b" | "both"): PanelSpec[] {
  if (selector === "a") return [PANEL_A];
  if (selector === "b") return [PANEL_B];
  return [PANEL_A, PANEL_B];
}
