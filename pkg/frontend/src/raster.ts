/**
 * Integer-only software rasterizer: enough primitives for axis frames,
 * polylines, scatter dots, and bitmap text.  No anti-aliasing, so output
 * bytes depend on nothing but the inputs.
 */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphRows } from "./font.js";

export type Color = readonly [number, number, number];

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number, background: Color = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.data[i * 4] = background[0];
      this.data[i * 4 + 1] = background[1];
      this.data[i * 4 + 2] = background[2];
      this.data[i * 4 + 3] = 255;
    }
  }

  set(x: number, y: number, color: Color): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const i = (y * this.width + x) * 4;
    this.data[i] = color[0];
    this.data[i + 1] = color[1];
    this.data[i + 2] = color[2];
    this.data[i + 3] = 255;
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: Color): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) {
        this.set(x, y, color);
      }
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Color): void {
    // Bresenham
    let [x, y] = [x0, y0];
    const dx = Math.abs(x1 - x0);
    const dy = -Math.abs(y1 - y0);
    const sx = x0 < x1 ? 1 : -1;
    const sy = y0 < y1 ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(x, y, color);
      if (x === x1 && y === y1) {
        break;
      }
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  thickLine(x0: number, y0: number, x1: number, y1: number, color: Color): void {
    this.line(x0, y0, x1, y1, color);
    this.line(x0, y0 + 1, x1, y1 + 1, color);
  }

  dot(cx: number, cy: number, radius: number, color: Color): void {
    for (let y = -radius; y <= radius; y++) {
      for (let x = -radius; x <= radius; x++) {
        if (x * x + y * y <= radius * radius) {
          this.set(cx + x, cy + y, color);
        }
      }
    }
  }

  text(x: number, y: number, content: string, color: Color, scale = 1): void {
    let penX = x;
    for (const ch of content) {
      const rows = glyphRows(ch);
      for (let gy = 0; gy < GLYPH_HEIGHT; gy++) {
        for (let gx = 0; gx < GLYPH_WIDTH; gx++) {
          if (rows[gy][gx] === "1") {
            this.fillRect(penX + gx * scale, y + gy * scale, scale, scale, color);
          }
        }
      }
      penX += (GLYPH_WIDTH + 1) * scale;
    }
  }
}
