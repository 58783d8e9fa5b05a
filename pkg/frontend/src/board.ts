/** Canvas renderer for one snapshot. Flat tiles, round actors, square
 *  pickups, a red ring on anything infected. */

import type { EntityKind, Snapshot } from "./snapshot.js";

const TILE_COLORS: Record<string, string> = {
  ".": "#2b2b33",
  "#": "#10101a",
  G: "#1e4d2b", // grocery shop
  R: "#4d1e3f", // pharmacy
  C: "#1e3a4d", // clinic
  H: "#4d441e", // home
};

const ACTOR_COLORS: Record<EntityKind, string> = {
  player: "#e8e4d8",
  civilian: "#7dc4e0",
  monster: "#c24343",
  mask: "#e0e0e0",
  sanitizer: "#8fe08f",
  grocery: "#e0b24d",
  medicine: "#e06fd0",
};

const PICKUPS: ReadonlySet<EntityKind> = new Set(["mask", "sanitizer", "grocery", "medicine"]);

export function tileSizeFor(snap: Snapshot, maxWidth: number, maxHeight: number): number {
  return Math.max(
    4,
    Math.floor(Math.min(maxWidth / snap.grid.width, maxHeight / snap.grid.height)),
  );
}

export function drawBoard(ctx: CanvasRenderingContext2D, snap: Snapshot, ts: number): void {
  const { width, height, tiles } = snap.grid;
  ctx.clearRect(0, 0, width * ts, height * ts);
  for (let y = 0; y < height; y++) {
    const row = tiles[y];
    for (let x = 0; x < width; x++) {
      ctx.fillStyle = TILE_COLORS[row[x]] ?? "#000";
      ctx.fillRect(x * ts, y * ts, ts, ts);
    }
  }
  // grid hairlines keep large tiles readable
  if (ts >= 12) {
    ctx.strokeStyle = "rgba(0,0,0,0.35)";
    ctx.lineWidth = 1;
    for (let x = 0; x <= width; x++) {
      ctx.beginPath();
      ctx.moveTo(x * ts + 0.5, 0);
      ctx.lineTo(x * ts + 0.5, height * ts);
      ctx.stroke();
    }
    for (let y = 0; y <= height; y++) {
      ctx.beginPath();
      ctx.moveTo(0, y * ts + 0.5);
      ctx.lineTo(width * ts, y * ts + 0.5);
      ctx.stroke();
    }
  }

  for (const ent of snap.entities) {
    const cx = ent.x * ts + ts / 2;
    const cy = ent.y * ts + ts / 2;
    ctx.fillStyle = ACTOR_COLORS[ent.kind];
    if (PICKUPS.has(ent.kind)) {
      const pad = Math.max(2, ts * 0.28);
      ctx.fillRect(ent.x * ts + pad, ent.y * ts + pad, ts - 2 * pad, ts - 2 * pad);
    } else {
      ctx.beginPath();
      ctx.arc(cx, cy, ts * 0.36, 0, Math.PI * 2);
      ctx.fill();
    }
    if (ent.infected) {
      ctx.strokeStyle = "#ff3b3b";
      ctx.lineWidth = Math.max(1.5, ts * 0.1);
      ctx.beginPath();
      ctx.arc(cx, cy, ts * 0.44, 0, Math.PI * 2);
      ctx.stroke();
    }
    if (ent.kind === "player" && snap.shield) {
      ctx.strokeStyle = "#59d9ff";
      ctx.lineWidth = Math.max(1, ts * 0.08);
      ctx.beginPath();
      ctx.arc(cx, cy, ts * 0.5, 0, Math.PI * 2);
      ctx.stroke();
    }
  }
}
