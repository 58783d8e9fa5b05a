/** Game sessions behind one interface: a live HTTP session against the
 *  engine's API, or playback of a pregenerated snapshot stream (demo mode,
 *  tests). Every payload goes through the schema validator. */

import type { CommandChar } from "./input.js";
import { asSnapshot, asStream, Snapshot, SnapshotStream } from "./snapshot.js";

export interface Session {
  /** First snapshot of a fresh game. */
  start(map: string, seed: number): Promise<Snapshot>;
  /** Advance one tick. */
  step(cmd: CommandChar): Promise<Snapshot>;
  end(): Promise<void>;
}

async function jsonOrThrow(resp: Response): Promise<unknown> {
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = (await resp.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new Error(`server: ${detail} (${resp.status})`);
  }
  return resp.json();
}

export class HttpSession implements Session {
  private sid: string | null = null;

  constructor(private readonly base: string = "") {}

  async listMaps(): Promise<string[]> {
    const doc = (await jsonOrThrow(await fetch(`${this.base}/api/maps`))) as { maps: string[] };
    return doc.maps;
  }

  async start(map: string, seed: number): Promise<Snapshot> {
    const resp = await fetch(`${this.base}/api/session`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ map, seed }),
    });
    const doc = (await jsonOrThrow(resp)) as { session: string; snapshot: unknown };
    this.sid = doc.session;
    return asSnapshot(doc.snapshot);
  }

  async step(cmd: CommandChar): Promise<Snapshot> {
    if (this.sid === null) throw new Error("no session started");
    const resp = await fetch(`${this.base}/api/session/${this.sid}/step`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ command: cmd }),
    });
    const doc = (await jsonOrThrow(resp)) as { snapshot: unknown };
    return asSnapshot(doc.snapshot);
  }

  async end(): Promise<void> {
    if (this.sid === null) return;
    await fetch(`${this.base}/api/session/${this.sid}`, { method: "DELETE" });
    this.sid = null;
  }
}

/** Replays a recorded stream frame by frame; commands are ignored because
 *  the trajectory is fixed. Holds on the final frame. */
export class FixtureSession implements Session {
  private readonly frames: Snapshot[];
  private at = 0;

  constructor(stream: SnapshotStream) {
    this.frames = stream.snapshots;
  }

  static fromJson(doc: unknown): FixtureSession {
    return new FixtureSession(asStream(doc));
  }

  async start(_map: string, _seed: number): Promise<Snapshot> {
    this.at = 0;
    return this.frames[0];
  }

  async step(_cmd: CommandChar): Promise<Snapshot> {
    if (this.at < this.frames.length - 1) this.at += 1;
    return this.frames[this.at];
  }

  async end(): Promise<void> {
    this.at = 0;
  }
}
