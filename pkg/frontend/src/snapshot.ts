/** Wire types for the render-snapshot JSON the engine emits, plus strict
 *  runtime validation. The schema id is versioned; anything else is refused
 *  so a stale client fails loudly instead of drawing garbage. */

export const SNAPSHOT_SCHEMA = "outbreak.render-snapshot/1";
export const STREAM_SCHEMA = "outbreak.render-snapshot-stream/1";

export type EntityKind =
  | "player"
  | "civilian"
  | "monster"
  | "mask"
  | "sanitizer"
  | "grocery"
  | "medicine";

export type PhaseName = "playing" | "won" | "lost";

export interface EntityView {
  kind: EntityKind;
  x: number;
  y: number;
  infected: boolean;
}

export interface EffectView {
  remaining: number;
  duration: number;
}

export interface QuotaLine {
  collected: number;
  required: number;
}

export interface Snapshot {
  schema: typeof SNAPSHOT_SCHEMA;
  tick: number;
  phase: PhaseName;
  grid: { width: number; height: number; tiles: string[] };
  entities: EntityView[];
  lifeline: { current: number; max: number };
  effects: { mask: EffectView; sanitizer: EffectView };
  shield: boolean;
  infected_count: number;
  quota: { groceries: QuotaLine; medicines: QuotaLine };
  score: number;
}

export interface SnapshotStream {
  schema: typeof STREAM_SCHEMA;
  snapshots: Snapshot[];
}

export class SchemaMismatchError extends Error {
  constructor(expected: string, got: unknown) {
    super(`expected schema ${expected}, got ${JSON.stringify(got)}`);
    this.name = "SchemaMismatchError";
  }
}

const ENTITY_KINDS: ReadonlySet<string> = new Set([
  "player",
  "civilian",
  "monster",
  "mask",
  "sanitizer",
  "grocery",
  "medicine",
]);

const PHASES: ReadonlySet<string> = new Set(["playing", "won", "lost"]);

function fail(path: string, why: string): never {
  throw new Error(`bad snapshot: ${path} ${why}`);
}

function needNumber(v: unknown, path: string): number {
  if (typeof v !== "number" || !Number.isFinite(v)) fail(path, "is not a finite number");
  return v;
}

function needObject(v: unknown, path: string): Record<string, unknown> {
  if (typeof v !== "object" || v === null || Array.isArray(v)) fail(path, "is not an object");
  return v as Record<string, unknown>;
}

function needPair(v: unknown, a: string, b: string, path: string): void {
  const o = needObject(v, path);
  needNumber(o[a], `${path}.${a}`);
  needNumber(o[b], `${path}.${b}`);
}

/** Validate an arbitrary parsed JSON value as a snapshot. Throws
 *  SchemaMismatchError on a wrong schema id, Error on structural damage. */
export function asSnapshot(doc: unknown): Snapshot {
  const o = needObject(doc, "snapshot");
  if (o.schema !== SNAPSHOT_SCHEMA) throw new SchemaMismatchError(SNAPSHOT_SCHEMA, o.schema);
  needNumber(o.tick, "tick");
  if (typeof o.phase !== "string" || !PHASES.has(o.phase)) fail("phase", "is not a phase name");

  const grid = needObject(o.grid, "grid");
  const width = needNumber(grid.width, "grid.width");
  const height = needNumber(grid.height, "grid.height");
  const tiles = grid.tiles;
  if (!Array.isArray(tiles) || tiles.length !== height) fail("grid.tiles", "row count mismatch");
  for (const row of tiles) {
    if (typeof row !== "string" || row.length !== width) fail("grid.tiles", "row width mismatch");
  }

  if (!Array.isArray(o.entities)) fail("entities", "is not an array");
  o.entities.forEach((e, i) => {
    const ent = needObject(e, `entities[${i}]`);
    if (typeof ent.kind !== "string" || !ENTITY_KINDS.has(ent.kind))
      fail(`entities[${i}].kind`, "is not an entity kind");
    needNumber(ent.x, `entities[${i}].x`);
    needNumber(ent.y, `entities[${i}].y`);
    if (typeof ent.infected !== "boolean") fail(`entities[${i}].infected`, "is not a boolean");
  });

  needPair(o.lifeline, "current", "max", "lifeline");
  const effects = needObject(o.effects, "effects");
  needPair(effects.mask, "remaining", "duration", "effects.mask");
  needPair(effects.sanitizer, "remaining", "duration", "effects.sanitizer");
  if (typeof o.shield !== "boolean") fail("shield", "is not a boolean");
  needNumber(o.infected_count, "infected_count");
  const quota = needObject(o.quota, "quota");
  needPair(quota.groceries, "collected", "required", "quota.groceries");
  needPair(quota.medicines, "collected", "required", "quota.medicines");
  needNumber(o.score, "score");
  return o as unknown as Snapshot;
}

/** Validate a stream document: schema id plus every contained snapshot. */
export function asStream(doc: unknown): SnapshotStream {
  const o = needObject(doc, "stream");
  if (o.schema !== STREAM_SCHEMA) throw new SchemaMismatchError(STREAM_SCHEMA, o.schema);
  if (!Array.isArray(o.snapshots) || o.snapshots.length === 0)
    fail("snapshots", "is not a non-empty array");
  o.snapshots.forEach(asSnapshot);
  return o as unknown as SnapshotStream;
}
