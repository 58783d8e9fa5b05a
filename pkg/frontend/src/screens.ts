/** Screen flow as a pure transition table so it can be model-tested without
 *  a DOM. Unlisted (screen, event) pairs are ignored (return null). */

export type Screen =
  | "start-menu"
  | "about"
  | "intro"
  | "instructions"
  | "playing"
  | "won"
  | "lost"
  | "exited";

export type ScreenEvent =
  | "play" // start-menu: begin a new run
  | "about" // start-menu: show credits / about
  | "back" // about: return to the menu
  | "advance" // intro -> instructions -> playing
  | "exit" // leave the game
  | "game-won" // simulation reached the won phase
  | "game-lost" // simulation reached the lost phase
  | "menu"; // terminal screens: back to the start menu

export const INITIAL_SCREEN: Screen = "start-menu";

const TABLE: Record<Screen, Partial<Record<ScreenEvent, Screen>>> = {
  "start-menu": { play: "intro", about: "about", exit: "exited" },
  about: { back: "start-menu" },
  intro: { advance: "instructions" },
  instructions: { advance: "playing", exit: "exited" },
  playing: { "game-won": "won", "game-lost": "lost" },
  won: { menu: "start-menu" },
  lost: { menu: "start-menu" },
  exited: { menu: "start-menu" },
};

export const ALL_SCREENS = Object.keys(TABLE) as Screen[];

export const ALL_EVENTS: ScreenEvent[] = [
  "play",
  "about",
  "back",
  "advance",
  "exit",
  "game-won",
  "game-lost",
  "menu",
];

/** Next screen for an event, or null when the event is ignored here. */
export function transition(screen: Screen, event: ScreenEvent): Screen | null {
  return TABLE[screen][event] ?? null;
}
