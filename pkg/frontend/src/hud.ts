/** HUD view-model: everything the overlay shows, derived from one snapshot.
 *  Pure data so it can be asserted on without a DOM. */

import type { Snapshot } from "./snapshot.js";

export interface BarModel {
  active: boolean;
  remaining: number;
  duration: number;
  /** 0..1 fill for the bar element. */
  fraction: number;
}

export interface QuotaLineModel {
  collected: number;
  required: number;
  met: boolean;
  label: string;
}

export interface ControlsModel {
  up: boolean;
  down: boolean;
  left: boolean;
  right: boolean;
}

export interface HudModel {
  lifeline: { current: number; max: number; fraction: number };
  /** The player currently carries the infection. */
  infected: boolean;
  /** Infected and therefore passing it on by contact; protection shields
   *  targets, never sources, so this tracks `infected` by design. */
  contagious: boolean;
  /** People infected by the player, directly or through onward spread. */
  infectedCount: number;
  quota: { groceries: QuotaLineModel; medicines: QuotaLineModel; met: boolean };
  score: number;
  mask: BarModel;
  sanitizer: BarModel;
  shield: boolean;
  /** Vertical movement buttons, greyed out once the run ends. */
  verticalControls: ControlsModel;
  /** Horizontal movement buttons, same gating. */
  horizontalControls: ControlsModel;
  status: string;
}

function bar(effect: { remaining: number; duration: number }): BarModel {
  return {
    active: effect.remaining > 0,
    remaining: effect.remaining,
    duration: effect.duration,
    fraction: effect.duration > 0 ? effect.remaining / effect.duration : 0,
  };
}

function quotaLine(line: { collected: number; required: number }, noun: string): QuotaLineModel {
  return {
    collected: line.collected,
    required: line.required,
    met: line.collected >= line.required,
    label: `${noun} ${line.collected}/${line.required}`,
  };
}

export function hudModel(snap: Snapshot): HudModel {
  const player = snap.entities.find((e) => e.kind === "player");
  const infected = player ? player.infected : false;
  const groceries = quotaLine(snap.quota.groceries, "groceries");
  const medicines = quotaLine(snap.quota.medicines, "medicine");
  const live = snap.phase === "playing";
  const controls: ControlsModel = { up: live, down: live, left: live, right: live };
  const status =
    snap.phase === "playing"
      ? `tick ${snap.tick}`
      : snap.phase === "won"
        ? "you made it home"
        : "the infection won";
  return {
    lifeline: {
      current: snap.lifeline.current,
      max: snap.lifeline.max,
      fraction: snap.lifeline.max > 0 ? snap.lifeline.current / snap.lifeline.max : 0,
    },
    infected,
    contagious: infected,
    infectedCount: snap.infected_count,
    quota: { groceries, medicines, met: groceries.met && medicines.met },
    score: snap.score,
    mask: bar(snap.effects.mask),
    sanitizer: bar(snap.effects.sanitizer),
    shield: snap.shield,
    verticalControls: controls,
    horizontalControls: controls,
    status,
  };
}
