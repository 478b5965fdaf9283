/** Minimal raster backend: RGBA canvas, line/marker/text drawing, PNG encode. */

import { deflateSync } from "node:zlib";

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyph, textWidth } from "./font.js";

export type Rgb = readonly [number, number, number];

export function parseColor(hex: string): Rgb {
  const m = /^#([0-9a-f]{6})$/i.exec(hex);
  if (!m) throw new Error(`unsupported color ${hex}`);
  const v = parseInt(m[1]!, 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4).fill(0xff);
  }

  set(x: number, y: number, color: Rgb): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.data[i] = color[0];
    this.data[i + 1] = color[1];
    this.data[i + 2] = color[2];
    this.data[i + 3] = 0xff;
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: Rgb): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) this.set(x, y, color);
    }
  }

  /** Bresenham segment with optional thickness (square pen). */
  line(x0: number, y0: number, x1: number, y1: number, color: Rgb, thickness = 1): void {
    let ix0 = Math.round(x0);
    let iy0 = Math.round(y0);
    const ix1 = Math.round(x1);
    const iy1 = Math.round(y1);
    const dx = Math.abs(ix1 - ix0);
    const dy = -Math.abs(iy1 - iy0);
    const sx = ix0 < ix1 ? 1 : -1;
    const sy = iy0 < iy1 ? 1 : -1;
    let err = dx + dy;
    const pad = Math.floor(thickness / 2);
    for (;;) {
      for (let oy = -pad; oy <= pad; oy++) {
        for (let ox = -pad; ox <= pad; ox++) this.set(ix0 + ox, iy0 + oy, color);
      }
      if (ix0 === ix1 && iy0 === iy1) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        ix0 += sx;
      }
      if (e2 <= dx) {
        err += dx;
        iy0 += sy;
      }
    }
  }

  marker(x: number, y: number, color: Rgb, size = 5): void {
    const half = Math.floor(size / 2);
    this.fillRect(Math.round(x) - half, Math.round(y) - half, size, size, color);
  }

  /** Bitmap text; lowercase input renders through the uppercase glyph set. */
  text(x: number, y: number, content: string, color: Rgb, scale = 2): void {
    let cursor = Math.round(x);
    for (const char of content) {
      const rows = glyph(char);
      for (let r = 0; r < GLYPH_HEIGHT; r++) {
        for (let c = 0; c < GLYPH_WIDTH; c++) {
          if (rows[r]![c] === "#") {
            this.fillRect(cursor + c * scale, Math.round(y) + r * scale, scale, scale, color);
          }
        }
      }
      cursor += (GLYPH_WIDTH + 1) * scale;
    }
  }

  textCentered(x: number, y: number, content: string, color: Rgb, scale = 2): void {
    this.text(x - textWidth(content, scale) / 2, y, content, color, scale);
  }

  /** Rotated 90 degrees counter-clockwise, for the y-axis label. */
  textVertical(x: number, y: number, content: string, color: Rgb, scale = 2): void {
    let cursor = Math.round(y) + textWidth(content, scale) / 2;
    for (const char of content) {
      const rows = glyph(char);
      for (let r = 0; r < GLYPH_HEIGHT; r++) {
        for (let c = 0; c < GLYPH_WIDTH; c++) {
          if (rows[r]![c] === "#") {
            this.fillRect(
              Math.round(x) + r * scale,
              cursor - c * scale - scale,
              scale,
              scale,
              color,
            );
          }
        }
      }
      cursor -= (GLYPH_WIDTH + 1) * scale;
    }
  }

  toPng(): Buffer {
    // filter byte 0 (None) per scanline, then one zlib stream
    const stride = this.width * 4;
    const raw = Buffer.alloc((stride + 1) * this.height);
    for (let y = 0; y < this.height; y++) {
      raw[y * (stride + 1)] = 0;
      Buffer.from(this.data.buffer, y * stride, stride).copy(raw, y * (stride + 1) + 1);
    }
    const ihdr = Buffer.alloc(13);
    ihdr.writeUInt32BE(this.width, 0);
    ihdr.writeUInt32BE(this.height, 4);
    ihdr[8] = 8; // bit depth
    ihdr[9] = 6; // color type RGBA
    const chunks = [
      Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
      pngChunk("IHDR", ihdr),
      pngChunk("IDAT", deflateSync(raw, { level: 9 })),
      pngChunk("IEND", Buffer.alloc(0)),
    ];
    return Buffer.concat(chunks);
  }
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) {
      c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    }
    table[n] = c >>> 0;
  }
  return table;
})();

function crc32(data: Buffer): number {
  let crc = 0xffffffff;
  for (const byte of data) {
    crc = CRC_TABLE[(crc ^ byte) & 0xff]! ^ (crc >>> 8);
  }
  return (crc ^ 0xffffffff) >>> 0;
}

function pngChunk(type: string, payload: Buffer): Buffer {
  const header = Buffer.alloc(4);
  header.writeUInt32BE(payload.length, 0);
  const body = Buffer.concat([Buffer.from(type, "ascii"), payload]);
  const crc = Buffer.alloc(4);
  crc.writeUInt32BE(crc32(body), 0);
  return Buffer.concat([header, body, crc]);
}
