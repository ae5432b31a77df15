// Hand-built protocol messages for the unit tests. The e2e test talks to the
// real service; everything here only needs to be shape-correct.

import { ConfigDoc, OutcomeDoc, RoundDoc, StateMessage } from "../src/protocol.js";

export const EVEN_CONFIG: ConfigDoc = { k: 4, n: 12, goal: "even-cycle", bound: 104 };

export function snapshot(over: Partial<StateMessage> = {}): StateMessage {
  return {
    type: "state",
    id: "abc123",
    config: EVEN_CONFIG,
    rounds: [],
    rounds_used: 0,
    bound: EVEN_CONFIG.bound,
    proposed: null,
    outcome: null,
    ...over,
  };
}

export function round(
  i: number,
  edge: [number, number],
  color: "red" | "blue",
  by = "stage-a",
): RoundDoc {
  return { i, edge, color, by };
}

/** A snapshot of a game the Builder just won with a red C4 on 0..3. */
export function wonSnapshot(): StateMessage {
  const edges: [number, number][] = [
    [0, 1],
    [1, 2],
    [2, 3],
    [0, 3],
  ];
  const outcome: OutcomeDoc = {
    kind: "won",
    rounds_used: 4,
    witness: { kind: "red_cycle", edges },
  };
  return snapshot({
    rounds: edges.map((e, i) => round(i + 1, e, "red")),
    rounds_used: 4,
    outcome,
  });
}
