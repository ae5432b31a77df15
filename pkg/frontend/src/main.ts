// Page wiring. One SessionClient, one view, one event channel: the socket for
// the current session delivers color/move/end events, every other path
// (starting a game, the refresh button, the REST fallback when sockets are
// unavailable) goes through full snapshots. All state changes funnel into
// render(), which just reprints the board from the view.

import { boardView } from "./board.js";
import { ServiceError, SessionClient } from "./client.js";
import { BuilderInfo, ColorName, parseServerMessage, ProtocolError } from "./protocol.js";
import {
  applyColor,
  applyEnd,
  applyMove,
  GameView,
  isFinished,
  viewFromSnapshot,
} from "./store.js";

const client = new SessionClient(window.location.origin);

let builders: BuilderInfo[] = [];
let view: GameView | null = null;
let error: string | null = null;
let awaiting = false; // a color went out, input stays off until move or end
let socket: WebSocket | null = null;

// ---- rendering -----------------------------------------------------------

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function render(): void {
  el("board").innerHTML = boardView(view, error);
  const open = view !== null && view.proposed !== null && !isFinished(view);
  for (const id of ["pick-red", "pick-blue"]) {
    el<HTMLButtonElement>(id).disabled = awaiting || !open;
  }
  el<HTMLButtonElement>("refresh").disabled = view === null;
}

function showError(detail: string): void {
  error = detail;
  render();
}

// ---- incoming events -------------------------------------------------------

function applyEvent(raw: unknown): void {
  try {
    const message = parseServerMessage(raw);
    switch (message.type) {
      case "state":
        view = viewFromSnapshot(message);
        break;
      case "color":
        if (view !== null) view = applyColor(view, message);
        break;
      case "move":
        if (view !== null) view = applyMove(view, message);
        awaiting = false;
        break;
      case "end":
        if (view !== null) view = applyEnd(view, message);
        awaiting = false;
        break;
      case "error":
        showError(`${message.error}: ${message.detail}`);
        awaiting = false;
        return;
      case "new_game":
        view = viewFromSnapshot(message.state);
        break;
    }
    error = null;
  } catch (exc) {
    if (!(exc instanceof ProtocolError)) throw exc;
    error = exc.message;
    awaiting = false;
  }
  render();
}

function openChannel(id: string): void {
  socket?.close();
  socket = null;
  if (typeof WebSocket === "undefined") return; // REST fallback handles play
  const ws = new WebSocket(client.eventsUrl(id));
  ws.onmessage = (event) => applyEvent(JSON.parse(event.data));
  ws.onclose = () => {
    if (socket === ws) socket = null;
  };
  socket = ws;
}

// ---- outgoing actions --------------------------------------------------------

async function startGame(): Promise<void> {
  const goal = el<HTMLSelectElement>("goal").value;
  const k = Number(el<HTMLInputElement>("param-k").value);
  const n = Number(el<HTMLInputElement>("param-n").value);
  try {
    const message = await client.createGame({ k, n, goal });
    awaiting = false;
    error = null;
    view = viewFromSnapshot(message.state);
    openChannel(message.id);
    render();
  } catch (exc) {
    if (exc instanceof ServiceError) showError(`${exc.code}: ${exc.message}`);
    else throw exc;
  }
}

async function chooseColor(color: ColorName): Promise<void> {
  if (view === null || view.proposed === null || awaiting || isFinished(view)) return;
  awaiting = true;
  render();
  if (socket !== null && socket.readyState === WebSocket.OPEN) {
    socket.send(JSON.stringify({ type: "color", edge: view.proposed, color }));
    return; // the channel echoes the color event, then the move or end
  }
  try {
    const edge = view.proposed;
    const reply = await client.submitColor(view.id, edge, color);
    view = applyColor(view, {
      type: "color",
      id: view.id,
      i: view.roundsUsed + 1,
      edge,
      color,
    });
    applyEvent(reply);
  } catch (exc) {
    awaiting = false;
    if (exc instanceof ServiceError) showError(`${exc.code}: ${exc.message}`);
    else throw exc;
  }
}

async function refresh(): Promise<void> {
  if (view === null) return;
  try {
    const snapshot = await client.getState(view.id);
    view = viewFromSnapshot(snapshot);
    awaiting = false;
    error = null;
    render();
  } catch (exc) {
    if (exc instanceof ServiceError) showError(`${exc.code}: ${exc.message}`);
    else throw exc;
  }
}

// ---- new game form -----------------------------------------------------------

function describeGoal(): void {
  const info = builders.find((b) => b.goal === el<HTMLSelectElement>("goal").value);
  el("goal-hint").textContent =
    info === undefined ? "" : `k: ${info.k}; n: ${info.n}; bound ${info.bound}`;
}

async function init(): Promise<void> {
  builders = await client.builders();
  el("goal").innerHTML = builders
    .map((b) => `<option value="${b.goal}">${b.name}</option>`)
    .join("");
  describeGoal();
  el("goal").addEventListener("change", describeGoal);
  el("new-game").addEventListener("click", () => void startGame());
  el("pick-red").addEventListener("click", () => void chooseColor("red"));
  el("pick-blue").addEventListener("click", () => void chooseColor("blue"));
  el("refresh").addEventListener("click", () => void refresh());
  render();
}

void init();
