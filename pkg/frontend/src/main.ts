/** Browser entry point. Query params: ?map=city&seed=7&mode=demo.
 *  mode=demo replays the bundled snapshot stream instead of calling the
 *  HTTP API, so the page works from any static file server. */

import { drawBoard, tileSizeFor } from "./board.js";
import { hudModel, HudModel } from "./hud.js";
import { InputSource, Direction } from "./input.js";
import { INITIAL_SCREEN, Screen, ScreenEvent, transition } from "./screens.js";
import { FixtureSession, HttpSession, Session } from "./session.js";
import { SchemaMismatchError, Snapshot } from "./snapshot.js";

const params = new URLSearchParams(location.search);
const MAP = params.get("map") ?? "city";
const SEED = Number(params.get("seed") ?? "1");
const DEMO = params.get("mode") === "demo";

const app = document.getElementById("app") as HTMLDivElement;

let screen: Screen = INITIAL_SCREEN;
let session: Session | null = null;
let timer: number | null = null;
let cadenceMs = 250;
const input = new InputSource();

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function button(label: string, event: ScreenEvent): HTMLButtonElement {
  const b = el("button", "menu-btn", label);
  b.addEventListener("click", () => dispatch(event));
  return b;
}

function banner(text: string): void {
  const strip = el("div", "banner", text);
  app.prepend(strip);
}

function dispatch(event: ScreenEvent): void {
  const next = transition(screen, event);
  if (next === null) return;
  if (screen === "playing") stopLoop();
  screen = next;
  render();
  if (screen === "playing") void startLoop();
}

// ---------------------------------------------------------------- screens

function render(): void {
  app.replaceChildren();
  switch (screen) {
    case "start-menu":
      renderMenu();
      break;
    case "about":
      renderAbout();
      break;
    case "intro":
      renderIntro();
      break;
    case "instructions":
      renderInstructions();
      break;
    case "playing":
      renderPlaying();
      break;
    case "won":
    case "lost":
      renderResult(screen === "won");
      break;
    case "exited":
      renderExited();
      break;
  }
}

function renderMenu(): void {
  const box = el("div", "panel");
  box.append(el("h1", "title", "OUTBREAK"));
  box.append(el("p", "subtitle", "get the supplies, keep your distance, make it home"));
  box.append(button("Play", "play"), button("About", "about"), button("Exit", "exit"));
  app.append(box);
}

function renderAbout(): void {
  const box = el("div", "panel");
  box.append(el("h2", "title", "About"));
  box.append(
    el(
      "p",
      "copy",
      "A tile-grid survival game about running errands during an outbreak. " +
        "Every run is deterministic: same map, same seed, same moves, same game.",
    ),
  );
  box.append(button("Back", "back"));
  app.append(box);
}

function renderIntro(): void {
  const box = el("div", "panel");
  box.append(el("h2", "title", "The city is sick"));
  box.append(
    el(
      "p",
      "copy",
      "Supplies are short and the streets are not safe. Your household needs " +
        "groceries and medicine, and somebody has to go get them.",
    ),
  );
  box.append(button("Continue", "advance"));
  app.append(box);
}

function renderInstructions(): void {
  const box = el("div", "panel");
  box.append(el("h2", "title", "How to survive"));
  const rules = el("ul", "copy");
  for (const line of [
    "Move with the arrow keys, WASD, or the on-screen pad.",
    "Collect the grocery and medicine quota shown on the right.",
    "Infected people and monsters spread the sickness by touch or next-tile contact.",
    "Masks and sanitizer block infection for a while; watch the bars.",
    "Infection drains your lifeline every tick. The clinic cures and refills it.",
    "Reach Home with the full quota to win.",
  ]) {
    rules.append(el("li", undefined, line));
  }
  box.append(rules);
  box.append(button("Start", "advance"), button("Exit", "exit"));
  app.append(box);
}

function renderResult(won: boolean): void {
  const box = el("div", "panel");
  box.append(el("h2", "title", won ? "You made it home" : "The infection won"));
  if (lastSnapshot) {
    box.append(el("p", "copy", `score ${lastSnapshot.score}, ${lastSnapshot.tick} ticks`));
    box.append(el("p", "copy", `people you infected: ${lastSnapshot.infected_count}`));
  }
  box.append(button("Menu", "menu"));
  app.append(box);
}

function renderExited(): void {
  const box = el("div", "panel");
  box.append(el("h2", "title", "Stay safe out there"));
  box.append(button("Menu", "menu"));
  app.append(box);
}

// ---------------------------------------------------------------- playing

let canvas: HTMLCanvasElement | null = null;
let hudRoot: HTMLDivElement | null = null;
let lastSnapshot: Snapshot | null = null;
let dpadButtons: Partial<Record<Direction, HTMLButtonElement>> = {};

function renderPlaying(): void {
  const wrap = el("div", "game");
  canvas = el("canvas", "board");
  wrap.append(canvas);

  hudRoot = el("div", "hud");
  wrap.append(hudRoot);
  app.append(wrap);

  const controls = el("div", "controls");
  dpadButtons = {};
  const pad = el("div", "dpad");
  for (const [dir, label, cls] of [
    ["up", "▲", "dpad-up"],
    ["left", "◀", "dpad-left"],
    ["right", "▶", "dpad-right"],
    ["down", "▼", "dpad-down"],
  ] as Array<[Direction, string, string]>) {
    const b = el("button", `dpad-btn ${cls}`, label);
    b.addEventListener("pointerdown", (ev) => {
      ev.preventDefault();
      input.press(dir);
    });
    for (const evName of ["pointerup", "pointerleave", "pointercancel"] as const) {
      b.addEventListener(evName, () => input.release(dir));
    }
    dpadButtons[dir] = b;
    pad.append(b);
  }
  controls.append(pad);

  const cadence = el("label", "cadence", "speed ");
  const slider = el("input") as HTMLInputElement;
  slider.type = "range";
  slider.min = "100";
  slider.max = "1000";
  slider.step = "50";
  slider.value = String(cadenceMs);
  slider.addEventListener("input", () => {
    cadenceMs = Number(slider.value);
    if (timer !== null) {
      stopTimer();
      startTimer();
    }
  });
  cadence.append(slider);
  controls.append(cadence);
  app.append(controls);
}

function paint(snap: Snapshot): void {
  lastSnapshot = snap;
  if (canvas) {
    const ts = tileSizeFor(snap, 900, 560);
    canvas.width = snap.grid.width * ts;
    canvas.height = snap.grid.height * ts;
    const ctx = canvas.getContext("2d");
    if (ctx) drawBoard(ctx, snap, ts);
  }
  if (hudRoot) paintHud(hudModel(snap));
}

function meter(cls: string, label: string, fraction: number, text: string): HTMLDivElement {
  const box = el("div", `meter ${cls}`);
  box.append(el("span", "meter-label", label));
  const track = el("div", "meter-track");
  const fill = el("div", "meter-fill");
  fill.style.width = `${Math.round(fraction * 100)}%`;
  track.append(fill);
  box.append(track);
  box.append(el("span", "meter-text", text));
  return box;
}

function paintHud(m: HudModel): void {
  if (!hudRoot) return;
  hudRoot.replaceChildren();
  hudRoot.append(
    meter("lifeline", "lifeline", m.lifeline.fraction, `${m.lifeline.current}/${m.lifeline.max}`),
  );
  const chips = el("div", "chips");
  if (m.infected) chips.append(el("span", "chip chip-bad", "infected"));
  if (m.contagious) chips.append(el("span", "chip chip-bad", "contagious"));
  if (m.shield) chips.append(el("span", "chip chip-good", "protected"));
  hudRoot.append(chips);
  hudRoot.append(el("div", "stat", `people you infected: ${m.infectedCount}`));
  hudRoot.append(el("div", "stat quota", m.quota.groceries.label));
  hudRoot.append(el("div", "stat quota", m.quota.medicines.label));
  hudRoot.append(el("div", "stat score", `score ${m.score}`));
  if (m.mask.active) {
    hudRoot.append(meter("mask", "mask", m.mask.fraction, `${m.mask.remaining}`));
  }
  if (m.sanitizer.active) {
    hudRoot.append(
      meter("sanitizer", "sanitizer", m.sanitizer.fraction, `${m.sanitizer.remaining}`),
    );
  }
  hudRoot.append(el("div", "stat status", m.status));
  for (const [dir, enabled] of [
    ["up", m.verticalControls.up],
    ["down", m.verticalControls.down],
    ["left", m.horizontalControls.left],
    ["right", m.horizontalControls.right],
  ] as Array<[Direction, boolean]>) {
    const b = dpadButtons[dir];
    if (b) b.disabled = !enabled;
  }
}

// ---------------------------------------------------------------- loop

async function startLoop(): Promise<void> {
  input.clear();
  try {
    if (DEMO) {
      const resp = await fetch("./demo-session.json");
      session = FixtureSession.fromJson(await resp.json());
    } else {
      session = new HttpSession();
    }
    const first = await session.start(MAP, SEED);
    paint(first);
    startTimer();
  } catch (err) {
    showLoopError(err);
  }
}

function startTimer(): void {
  timer = window.setInterval(() => void tick(), cadenceMs);
}

function stopTimer(): void {
  if (timer !== null) {
    window.clearInterval(timer);
    timer = null;
  }
}

function stopLoop(): void {
  stopTimer();
  if (session) void session.end();
  session = null;
}

let stepping = false;

async function tick(): Promise<void> {
  if (!session || stepping) return;
  stepping = true;
  try {
    const snap = await session.step(input.take());
    paint(snap);
    if (snap.phase === "won") dispatch("game-won");
    else if (snap.phase === "lost") dispatch("game-lost");
  } catch (err) {
    stopLoop();
    showLoopError(err);
  } finally {
    stepping = false;
  }
}

function showLoopError(err: unknown): void {
  if (err instanceof SchemaMismatchError) {
    banner(`snapshot schema mismatch - update this client (${err.message})`);
  } else {
    banner(`connection to the game engine failed: ${String(err)}`);
  }
}

window.addEventListener("keydown", (ev) => {
  if (screen === "playing" && input.keyDown(ev.key)) ev.preventDefault();
});
window.addEventListener("keyup", (ev) => input.keyUp(ev.key));

render();
