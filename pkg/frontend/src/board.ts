// Render a GameView as markup: an error banner when the server said something
// the protocol layer refused, a status line, the board itself as inline SVG,
// and the outcome banner once the game is over. Pure string building, so the
// same functions drive both the page and the tests.

import { layoutBoard, Point } from "./layout.js";
import { GameView, vertices, witnessStatus } from "./store.js";

const BOARD_SIZE = 480;

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

function line(a: Point, b: Point, cls: string): string {
  return `<line class="${cls}" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" />`;
}

// ---- pieces ------------------------------------------------------------------

export function errorBanner(detail: string): string {
  return `<div class="banner banner-error">Out of sync with the server: ${escapeHtml(detail)}. Refresh to resync.</div>`;
}

export function statusLine(view: GameView): string {
  const round = view.outcome === null ? view.roundsUsed + 1 : view.roundsUsed;
  const stage =
    view.proposedBy !== null
      ? ` <span class="by-tag">${escapeHtml(view.proposedBy)}</span>`
      : "";
  return `<div class="status">round ${round} of at most ${view.bound}${stage}</div>`;
}

export function outcomeBanner(view: GameView): string {
  const outcome = view.outcome;
  if (outcome === null) return "";
  if (outcome.witness === undefined) {
    return `<div class="banner banner-end">game over: ${escapeHtml(outcome.kind)} after ${outcome.rounds_used} rounds</div>`;
  }
  const status = witnessStatus(view);
  const badge =
    status === "verified"
      ? `<span class="badge badge-verified">verified</span>`
      : `<span class="badge badge-mismatch">not verified</span>`;
  const kind = escapeHtml(outcome.witness.kind.replace("_", " "));
  return (
    `<div class="banner banner-end">Builder forced a ${kind} in ` +
    `${outcome.rounds_used} of ${view.bound} rounds ${badge}</div>`
  );
}

export function boardSvg(view: GameView): string {
  const points = layoutBoard(view, BOARD_SIZE);
  const witnessEdges = new Set(
    (view.outcome?.witness?.edges ?? []).map(([u, v]) => edgeKey(u, v)),
  );
  const parts: string[] = [];
  for (const e of view.edges) {
    const marked = witnessEdges.has(edgeKey(e.u, e.v)) ? " edge-witness" : "";
    parts.push(line(points.get(e.u)!, points.get(e.v)!, `edge-${e.color}${marked}`));
  }
  if (view.proposed !== null) {
    const [u, v] = view.proposed;
    parts.push(line(points.get(u)!, points.get(v)!, "edge-proposed"));
  }
  for (const x of vertices(view)) {
    const p = points.get(x)!;
    const pending =
      view.proposed !== null && (view.proposed[0] === x || view.proposed[1] === x);
    parts.push(
      `<circle class="vertex${pending ? " vertex-pending" : ""}" cx="${p.x}" cy="${p.y}" r="9" />`,
      `<text class="vertex-label" x="${p.x}" y="${p.y}">${x}</text>`,
    );
  }
  return (
    `<svg viewBox="0 0 ${BOARD_SIZE} ${BOARD_SIZE}" width="${BOARD_SIZE}" height="${BOARD_SIZE}">` +
    parts.join("") +
    `</svg>`
  );
}

/** The whole play area for one view, or a placeholder before the first game. */
export function boardView(view: GameView | null, error: string | null = null): string {
  const pieces: string[] = [];
  if (error !== null) pieces.push(errorBanner(error));
  if (view === null) {
    pieces.push(`<div class="placeholder">No game yet. Start one above.</div>`);
    return pieces.join("\n");
  }
  pieces.push(statusLine(view));
  pieces.push(outcomeBanner(view));
  pieces.push(boardSvg(view));
  return pieces.join("\n");
}
