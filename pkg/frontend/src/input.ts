/** Keyboard / D-pad input, resolved to exactly one command per tick.
 *
 *  Held keys repeat every tick; a tap between ticks is latched so it still
 *  counts once. When several directions are down at the same instant the
 *  priority is Up, Down, Left, Right. No input means Stay. */

export type CommandChar = "U" | "D" | "L" | "R" | "S";

export type Direction = "up" | "down" | "left" | "right";

const PRIORITY: Direction[] = ["up", "down", "left", "right"];

const COMMAND: Record<Direction, CommandChar> = {
  up: "U",
  down: "D",
  left: "L",
  right: "R",
};

const KEYMAP: Record<string, Direction> = {
  ArrowUp: "up",
  ArrowDown: "down",
  ArrowLeft: "left",
  ArrowRight: "right",
  w: "up",
  s: "down",
  a: "left",
  d: "right",
  W: "up",
  S: "down",
  A: "left",
  D: "right",
};

export class InputSource {
  private held = new Set<Direction>();
  private latched = new Set<Direction>();

  /** Returns true when the key maps to a direction (caller preventDefaults). */
  keyDown(key: string): boolean {
    const dir = KEYMAP[key];
    if (dir === undefined) return false;
    this.held.add(dir);
    this.latched.add(dir);
    return true;
  }

  keyUp(key: string): void {
    const dir = KEYMAP[key];
    if (dir !== undefined) this.held.delete(dir);
  }

  /** On-screen D-pad hooks. */
  press(dir: Direction): void {
    this.held.add(dir);
    this.latched.add(dir);
  }

  release(dir: Direction): void {
    this.held.delete(dir);
  }

  /** Consume the command for this tick. */
  take(): CommandChar {
    for (const dir of PRIORITY) {
      if (this.held.has(dir) || this.latched.has(dir)) {
        this.latched.clear();
        return COMMAND[dir];
      }
    }
    this.latched.clear();
    return "S";
  }

  clear(): void {
    this.held.clear();
    this.latched.clear();
  }
}
