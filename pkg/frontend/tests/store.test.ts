import { describe, expect, it } from "vitest";

import {
  applyColor,
  applyEnd,
  applyMove,
  isFinished,
  vertices,
  viewFromSnapshot,
  witnessStatus,
} from "../src/store.js";
import { round, snapshot, wonSnapshot } from "./fixtures.js";

describe("viewFromSnapshot", () => {
  it("projects rounds into edges and keeps the proposal", () => {
    const view = viewFromSnapshot(
      snapshot({
        rounds: [round(1, [0, 1], "blue"), round(2, [1, 2], "red", "stage-b")],
        rounds_used: 2,
        proposed: [2, 3],
        by: "stage-b",
      }),
    );
    expect(view.edges).toEqual([
      { i: 1, u: 0, v: 1, color: "blue", by: "stage-a" },
      { i: 2, u: 1, v: 2, color: "red", by: "stage-b" },
    ]);
    expect(view.roundsUsed).toBe(2);
    expect(view.proposed).toEqual([2, 3]);
    expect(view.proposedBy).toBe("stage-b");
    expect(isFinished(view)).toBe(false);
  });
});

describe("event reducers", () => {
  it("land on exactly the view a refreshed snapshot would build", () => {
    const before = viewFromSnapshot(snapshot({ proposed: [0, 1], by: "stage-a" }));
    const colored = applyColor(before, {
      type: "color",
      id: "abc123",
      i: 1,
      edge: [0, 1],
      color: "blue",
    });
    const after = applyMove(colored, {
      type: "move",
      id: "abc123",
      i: 2,
      edge: [0, 2],
      by: "stage-b",
    });

    const refreshed = viewFromSnapshot(
      snapshot({
        rounds: [round(1, [0, 1], "blue")],
        rounds_used: 1,
        proposed: [0, 2],
        by: "stage-b",
      }),
    );
    expect(after).toEqual(refreshed);
  });

  it("an end event matches the final snapshot", () => {
    const final = wonSnapshot();
    let view = viewFromSnapshot(
      snapshot({
        rounds: final.rounds.slice(0, 3),
        rounds_used: 3,
        proposed: [0, 3],
        by: "stage-a",
      }),
    );
    view = applyColor(view, { type: "color", id: "abc123", i: 4, edge: [0, 3], color: "red" });
    view = applyEnd(view, {
      type: "end",
      id: "abc123",
      outcome: final.outcome!,
      rounds_used: 4,
      bound: final.bound,
    });
    expect(view).toEqual(viewFromSnapshot(final));
    expect(isFinished(view)).toBe(true);
  });

  it("ignores a color event when nothing is proposed", () => {
    const view = viewFromSnapshot(snapshot());
    const same = applyColor(view, {
      type: "color",
      id: "abc123",
      i: 1,
      edge: [0, 1],
      color: "red",
    });
    expect(same).toBe(view);
  });
});

describe("vertices", () => {
  it("lists endpoints in first-appearance order, proposal included", () => {
    const view = viewFromSnapshot(
      snapshot({
        rounds: [round(1, [3, 1], "blue"), round(2, [1, 0], "blue")],
        rounds_used: 2,
        proposed: [0, 7],
        by: "stage-a",
      }),
    );
    expect(vertices(view)).toEqual([3, 1, 0, 7]);
  });
});

describe("witnessStatus", () => {
  it("is null while the game runs and verified for a clean red cycle", () => {
    expect(witnessStatus(viewFromSnapshot(snapshot()))).toBeNull();
    expect(witnessStatus(viewFromSnapshot(wonSnapshot()))).toBe("verified");
  });

  it("rejects a witness edge the board painted the other color", () => {
    const doc = wonSnapshot();
    doc.rounds[2] = round(3, [2, 3], "blue");
    expect(witnessStatus(viewFromSnapshot(doc))).toBe("mismatch");
  });

  it("rejects a cycle of the wrong length", () => {
    const doc = wonSnapshot();
    doc.outcome!.witness!.edges = [
      [0, 1],
      [1, 2],
      [0, 2],
    ];
    doc.rounds = doc.outcome!.witness!.edges.map((e, i) => round(i + 1, e, "red"));
    doc.rounds_used = 3;
    expect(witnessStatus(viewFromSnapshot(doc))).toBe("mismatch");
  });

  it("rejects two disjoint pieces posing as one cycle", () => {
    const doc = wonSnapshot();
    const edges: [number, number][] = [
      [0, 1],
      [0, 1],
      [2, 3],
      [2, 3],
    ];
    doc.outcome!.witness!.edges = edges;
    expect(witnessStatus(viewFromSnapshot(doc))).toBe("mismatch");
  });

  it("verifies a blue path witness on n vertices", () => {
    const edges: [number, number][] = [
      [0, 1],
      [1, 2],
      [2, 3],
    ];
    const doc = snapshot({
      config: { k: 3, n: 4, goal: "odd-path", bound: 162 },
      rounds: edges.map((e, i) => round(i + 1, e, "blue")),
      rounds_used: 3,
      outcome: { kind: "won", rounds_used: 3, witness: { kind: "blue_path", edges } },
    });
    expect(witnessStatus(viewFromSnapshot(doc))).toBe("verified");
  });
});
