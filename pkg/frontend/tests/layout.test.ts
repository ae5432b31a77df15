import { describe, expect, it } from "vitest";

import { layoutBoard } from "../src/layout.js";
import { viewFromSnapshot } from "../src/store.js";
import { round, snapshot } from "./fixtures.js";

const SIZE = 480;
const CENTER = SIZE / 2;
const RING = SIZE * 0.36;

function distance(p: { x: number; y: number }): number {
  return Math.hypot(p.x - CENTER, p.y - CENTER);
}

function pathView(length: number, color: "red" | "blue") {
  const rounds = [];
  for (let i = 0; i < length; i++) rounds.push(round(i + 1, [i, i + 1], color));
  return viewFromSnapshot(snapshot({ rounds, rounds_used: length }));
}

describe("layoutBoard", () => {
  it("gives every vertex a distinct position and never jitters", () => {
    const view = pathView(5, "blue");
    const a = layoutBoard(view);
    const b = layoutBoard(view);
    expect(a).toEqual(b);
    expect(a.size).toBe(6);
    expect(new Set([...a.values()].map((p) => `${p.x},${p.y}`)).size).toBe(6);
  });

  it("pins a tracked blue chain onto the main ring", () => {
    const view = pathView(7, "blue");
    for (const p of layoutBoard(view).values()) {
      expect(Math.abs(distance(p) - RING)).toBeLessThan(2);
    }
  });

  it("falls back to circle order when no blue chain exists", () => {
    const positions = layoutBoard(pathView(4, "red"));
    expect(positions.size).toBe(5);
    for (const p of positions.values()) {
      expect(Math.abs(distance(p) - RING)).toBeLessThan(2);
    }
  });

  it("hangs tails radially outside the tracked cycle", () => {
    const rounds = [];
    for (let i = 0; i < 5; i++) rounds.push(round(i + 1, [i, i + 1], "blue"));
    rounds.push(round(6, [5, 0], "blue")); // close a blue C6
    rounds.push(round(7, [0, 9], "red"));
    rounds.push(round(8, [9, 10], "red"));
    const view = viewFromSnapshot(snapshot({ rounds, rounds_used: 8 }));
    const positions = layoutBoard(view);
    expect(positions.size).toBe(8);
    for (let i = 0; i < 6; i++) {
      expect(Math.abs(distance(positions.get(i)!) - RING)).toBeLessThan(2);
    }
    expect(distance(positions.get(9)!)).toBeGreaterThan(RING + 20);
    expect(distance(positions.get(10)!)).toBeGreaterThan(distance(positions.get(9)!) + 20);
  });

  it("places the endpoints of the proposed edge too", () => {
    const view = viewFromSnapshot(
      snapshot({
        rounds: [round(1, [0, 1], "blue"), round(2, [1, 2], "blue"), round(3, [2, 3], "blue")],
        rounds_used: 3,
        proposed: [3, 42],
        by: "stage-a",
      }),
    );
    expect(layoutBoard(view).get(42)).toBeDefined();
  });
});
