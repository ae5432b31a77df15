// Client-side game state. A GameView is a pure projection of the latest
// server snapshot: event reducers (color, move, end) must land on exactly the
// view a fresh GET /games/{id} would build, so a mid-game refresh changes
// nothing. No strategy logic lives here; the view only records what the
// server said.

import {
  ColorEvent,
  ColorName,
  ConfigDoc,
  EndMessage,
  MoveMessage,
  OutcomeDoc,
  StateMessage,
} from "./protocol.js";

export interface EdgeView {
  i: number;
  u: number;
  v: number;
  color: ColorName;
  by: string;
}

export interface GameView {
  id: string;
  config: ConfigDoc;
  edges: EdgeView[];
  roundsUsed: number;
  bound: number;
  proposed: [number, number] | null;
  proposedBy: string | null;
  outcome: OutcomeDoc | null;
}

// ---- projection and reducers ------------------------------------------------

export function viewFromSnapshot(state: StateMessage): GameView {
  return {
    id: state.id,
    config: state.config,
    edges: state.rounds.map((r) => ({
      i: r.i,
      u: r.edge[0],
      v: r.edge[1],
      color: r.color,
      by: r.by,
    })),
    roundsUsed: state.rounds_used,
    bound: state.bound,
    proposed: state.proposed,
    proposedBy: state.proposed === null ? null : (state.by ?? null),
    outcome: state.outcome,
  };
}

/** The proposed edge got its color; the view now waits for a move or end. */
export function applyColor(view: GameView, event: ColorEvent): GameView {
  if (view.proposed === null) return view; // stale event, refresh will fix it
  const [u, v] = view.proposed;
  return {
    ...view,
    edges: [...view.edges, { i: event.i, u, v, color: event.color, by: view.proposedBy! }],
    roundsUsed: event.i,
    proposed: null,
    proposedBy: null,
  };
}

export function applyMove(view: GameView, event: MoveMessage): GameView {
  return { ...view, proposed: event.edge, proposedBy: event.by };
}

export function applyEnd(view: GameView, event: EndMessage): GameView {
  return {
    ...view,
    roundsUsed: event.rounds_used,
    outcome: event.outcome,
    proposed: null,
    proposedBy: null,
  };
}

export function isFinished(view: GameView): boolean {
  return view.outcome !== null;
}

// ---- derived data ------------------------------------------------------------

/** Every vertex the game has touched, in first-appearance order. */
export function vertices(view: GameView): number[] {
  const seen: number[] = [];
  const mark = new Set<number>();
  const take = (x: number) => {
    if (!mark.has(x)) {
      mark.add(x);
      seen.push(x);
    }
  };
  for (const e of view.edges) {
    take(e.u);
    take(e.v);
  }
  if (view.proposed !== null) {
    take(view.proposed[0]);
    take(view.proposed[1]);
  }
  return seen;
}

function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

/**
 * Re-check the claimed witness against the colored edges the client saw
 * itself. Verified means: every witness edge is on the board in the winning
 * color, and the edges form the shape the outcome kind claims (a cycle of the
 * agreed length, or a path). Returns null while the game is still running or
 * when the outcome carries no witness.
 */
export function witnessStatus(view: GameView): "verified" | "mismatch" | null {
  const witness = view.outcome?.witness;
  if (witness === undefined || view.outcome === null) return null;
  const wantColor: ColorName = witness.kind === "red_cycle" ? "red" : "blue";
  const onBoard = new Map<string, ColorName>();
  for (const e of view.edges) onBoard.set(edgeKey(e.u, e.v), e.color);
  for (const [u, v] of witness.edges) {
    if (onBoard.get(edgeKey(u, v)) !== wantColor) return "mismatch";
  }
  const degree = new Map<number, number>();
  const keys = new Set<string>();
  for (const [u, v] of witness.edges) {
    if (u === v || keys.has(edgeKey(u, v))) return "mismatch";
    keys.add(edgeKey(u, v));
    degree.set(u, (degree.get(u) ?? 0) + 1);
    degree.set(v, (degree.get(v) ?? 0) + 1);
  }
  if (!connected(witness.edges)) return "mismatch";
  const counts = [...degree.values()];
  if (witness.kind === "red_cycle" || witness.kind === "blue_cycle") {
    const want = witness.kind === "red_cycle" ? view.config.k : view.config.n;
    if (witness.edges.length !== want) return "mismatch";
    return counts.every((d) => d === 2) ? "verified" : "mismatch";
  }
  if (witness.kind === "blue_path") {
    // A path on m vertices has m - 1 edges; the degenerate one-vertex path
    // arrives with no edges at all and there is nothing left to check.
    if (witness.edges.length === 0) return view.config.n === 1 ? "verified" : "mismatch";
    if (witness.edges.length !== view.config.n - 1) return "mismatch";
    const ends = counts.filter((d) => d === 1).length;
    return ends === 2 && counts.every((d) => d <= 2) ? "verified" : "mismatch";
  }
  return "mismatch";
}

function connected(edges: [number, number][]): boolean {
  if (edges.length === 0) return true;
  const adjacency = new Map<number, number[]>();
  for (const [u, v] of edges) {
    adjacency.set(u, [...(adjacency.get(u) ?? []), v]);
    adjacency.set(v, [...(adjacency.get(v) ?? []), u]);
  }
  const stack = [edges[0][0]];
  const seen = new Set(stack);
  while (stack.length > 0) {
    for (const next of adjacency.get(stack.pop()!) ?? []) {
      if (!seen.has(next)) {
        seen.add(next);
        stack.push(next);
      }
    }
  }
  return seen.size === adjacency.size;
}
