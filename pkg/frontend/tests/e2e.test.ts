// End-to-end: a scripted session against the real Python service. Spawns
// uvicorn, creates a k=4 n=12 even-cycle game through the client layer, plays
// ten human-style colors, checks a mid-game refresh reconstructs the exact
// same view, then plays to the end and checks the final screen.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { boardView } from "../src/board.js";
import { SessionClient } from "../src/client.js";
import { ColorName } from "../src/protocol.js";
import {
  applyColor,
  applyEnd,
  applyMove,
  GameView,
  isFinished,
  viewFromSnapshot,
  witnessStatus,
} from "../src/store.js";

const PORT = 8471;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "online_ramsey.service:app", "--port", String(PORT), "--log-level", "warning"],
    { stdio: ["ignore", "inherit", "inherit"] },
  );
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const res = await fetch(`${BASE}/builders`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error("service never came up");
    await new Promise((r) => setTimeout(r, 150));
  }
});

afterAll(async () => {
  server.kill();
  await new Promise((resolve) => server.once("exit", resolve));
});

/** Color the proposed edge and fold the color plus the reply into the view. */
async function paint(client: SessionClient, view: GameView, color: ColorName): Promise<GameView> {
  const edge = view.proposed!;
  const reply = await client.submitColor(view.id, edge, color);
  const next = applyColor(view, {
    type: "color",
    id: view.id,
    i: view.roundsUsed + 1,
    edge,
    color,
  });
  return reply.type === "move" ? applyMove(next, reply) : applyEnd(next, reply);
}

describe("scripted session against the live service", () => {
  it("plays an even-cycle game to a verified finish", async () => {
    const client = new SessionClient(BASE);

    const builders = await client.builders();
    expect(builders.map((b) => b.goal)).toContain("even-cycle");

    const created = await client.createGame({ k: 4, n: 12, goal: "even-cycle" });
    let view = viewFromSnapshot(created.state);
    expect(view.bound).toBe(104);
    expect(view.proposed).not.toBeNull();

    // Ten colors the way a person would mix them. Three reds cannot finish a
    // red C4 and ten rounds cannot finish a blue C12, so the game runs on.
    const opening: ColorName[] = [
      "blue", "red", "blue", "blue", "red",
      "blue", "blue", "red", "blue", "blue",
    ];
    for (const color of opening) view = await paint(client, view, color);
    expect(view.roundsUsed).toBe(10);
    expect(isFinished(view)).toBe(false);

    // A reload mid-game rebuilds the identical view from the snapshot alone.
    const refreshed = viewFromSnapshot(await client.getState(view.id));
    expect(refreshed).toEqual(view);

    for (let i = 0; !isFinished(view); i++) {
      expect(i).toBeLessThan(view.bound + 1);
      view = await paint(client, view, i % 3 === 2 ? "red" : "blue");
    }

    expect(view.outcome!.kind).toBe("won");
    expect(view.roundsUsed).toBeLessThanOrEqual(106);
    expect(view.roundsUsed).toBe(view.outcome!.rounds_used);
    expect(witnessStatus(view)).toBe("verified");

    // The final snapshot agrees with the incrementally built view.
    expect(viewFromSnapshot(await client.getState(view.id))).toEqual(view);

    const screen = boardView(view);
    expect(screen).toContain("badge-verified");
    expect(screen).toContain("edge-witness");
    expect(screen).toContain(`${view.roundsUsed} of ${view.bound} rounds`);
  });
});
