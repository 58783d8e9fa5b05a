import { describe, expect, it } from "vitest";

import {
  ALL_EVENTS,
  ALL_SCREENS,
  INITIAL_SCREEN,
  Screen,
  ScreenEvent,
  transition,
} from "../src/screens.js";

// Independent transcription of the intended flow; the test sweeps every
// (screen, event) pair against it so no transition can sneak in or drop out.
const EXPECTED: Array<[Screen, ScreenEvent, Screen]> = [
  ["start-menu", "play", "intro"],
  ["start-menu", "about", "about"],
  ["start-menu", "exit", "exited"],
  ["about", "back", "start-menu"],
  ["intro", "advance", "instructions"],
  ["instructions", "advance", "playing"],
  ["instructions", "exit", "exited"],
  ["playing", "game-won", "won"],
  ["playing", "game-lost", "lost"],
  ["won", "menu", "start-menu"],
  ["lost", "menu", "start-menu"],
  ["exited", "menu", "start-menu"],
];

describe("screen flow", () => {
  it("starts at the menu", () => {
    expect(INITIAL_SCREEN).toBe("start-menu");
  });

  it("matches the reference table on every (screen, event) pair", () => {
    const allowed = new Map(EXPECTED.map(([s, e, t]) => [`${s}|${e}`, t]));
    for (const screen of ALL_SCREENS) {
      for (const event of ALL_EVENTS) {
        const got = transition(screen, event);
        const want = allowed.get(`${screen}|${event}`) ?? null;
        expect(got, `${screen} x ${event}`).toBe(want);
      }
    }
  });

  it("reaches every screen from the start menu", () => {
    const seen = new Set<Screen>([INITIAL_SCREEN]);
    const frontier: Screen[] = [INITIAL_SCREEN];
    while (frontier.length > 0) {
      const here = frontier.pop() as Screen;
      for (const event of ALL_EVENTS) {
        const next = transition(here, event);
        if (next !== null && !seen.has(next)) {
          seen.add(next);
          frontier.push(next);
        }
      }
    }
    expect([...seen].sort()).toEqual([...ALL_SCREENS].sort());
  });

  it("only leaves the playing screen through a game result", () => {
    for (const event of ALL_EVENTS) {
      const next = transition("playing", event);
      if (event === "game-won") expect(next).toBe("won");
      else if (event === "game-lost") expect(next).toBe("lost");
      else expect(next).toBeNull();
    }
  });

  it("routes both results and the exit screen back to the menu", () => {
    for (const terminal of ["won", "lost", "exited"] as Screen[]) {
      expect(transition(terminal, "menu")).toBe("start-menu");
    }
  });
});
