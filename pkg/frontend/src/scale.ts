/** Axis scales and tick generation for log-log panels. */

export interface Scale {
  /** data value -> pixel coordinate */
  toPixel(value: number): number;
  ticks(): number[];
  readonly min: number;
  readonly max: number;
  readonly log: boolean;
}

export function makeScale(
  values: number[],
  pixelLo: number,
  pixelHi: number,
  log: boolean,
): Scale {
  const usable = log ? values.filter((v) => v > 0) : values;
  if (usable.length === 0) {
    throw new Error("no usable data values for axis scale");
  }
  let min = Math.min(...usable);
  let max = Math.max(...usable);
  if (min === max) {
    // degenerate span: pad so the point sits mid-axis
    min = log ? min / 2 : min - 1;
    max = log ? max * 2 : max + 1;
  }
  const lo = log ? Math.log10(min) : min;
  const hi = log ? Math.log10(max) : max;
  const toPixel = (value: number): number => {
    const t = ((log ? Math.log10(value) : value) - lo) / (hi - lo);
    return pixelLo + t * (pixelHi - pixelLo);
  };
  const ticks = (): number[] => {
    if (log) {
      const out: number[] = [];
      const first = Math.ceil(lo);
      const last = Math.floor(hi);
      const stride = Math.max(1, Math.ceil((last - first) / 8));
      for (let e = first; e <= last; e += stride) out.push(10 ** e);
      return out.length >= 2 ? out : [min, max];
    }
    const span = hi - lo;
    const step = 10 ** Math.floor(Math.log10(span / 4));
    const stride = Math.ceil(span / (8 * step)) * step;
    const out: number[] = [];
    for (let v = Math.ceil(lo / stride) * stride; v <= hi; v += stride) out.push(v);
    return out;
  };
  return { toPixel, ticks, min, max, log };
}

/** Compact tick label, "1e+05"-style for log axes. */
export function tickLabel(value: number, log: boolean): string {
  if (log) {
    const exponent = Math.round(Math.log10(value));
    if (Math.abs(value - 10 ** exponent) < 1e-9 * value) {
      return `1e${exponent >= 0 ? "+" : "-"}${String(Math.abs(exponent)).padStart(2, "0")}`;
    }
    return value.toExponential(1);
  }
  return Math.abs(value) >= 1e4 || (value !== 0 && Math.abs(value) < 1e-3)
    ? value.toExponential(1)
    : String(value);
}
