import { describe, expect, it } from "vitest";

import { boardSvg, boardView, outcomeBanner, statusLine } from "../src/board.js";
import { viewFromSnapshot } from "../src/store.js";
import { round, snapshot, wonSnapshot } from "./fixtures.js";

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("boardSvg", () => {
  it("draws every edge in its color and highlights the proposal", () => {
    const view = viewFromSnapshot(
      snapshot({
        rounds: [round(1, [0, 1], "blue"), round(2, [1, 2], "red")],
        rounds_used: 2,
        proposed: [2, 3],
        by: "stage-a",
      }),
    );
    const svg = boardSvg(view);
    expect(count(svg, 'class="edge-blue"')).toBe(1);
    expect(count(svg, 'class="edge-red"')).toBe(1);
    expect(count(svg, 'class="edge-proposed"')).toBe(1);
    expect(count(svg, "<circle")).toBe(4);
    expect(count(svg, "vertex-pending")).toBe(2);
  });

  it("marks the witness edges once the game is over", () => {
    const svg = boardSvg(viewFromSnapshot(wonSnapshot()));
    expect(count(svg, "edge-witness")).toBe(4);
    expect(count(svg, "edge-proposed")).toBe(0);
  });
});

describe("banners and status", () => {
  it("shows the round counter against the bound and the stage tag", () => {
    const view = viewFromSnapshot(
      snapshot({ rounds: [round(1, [0, 1], "blue")], rounds_used: 1, proposed: [1, 2], by: "x<y" }),
    );
    const status = statusLine(view);
    expect(status).toContain("round 2 of at most 104");
    expect(status).toContain("x&lt;y");
  });

  it("announces a verified witness at the end", () => {
    const banner = outcomeBanner(viewFromSnapshot(wonSnapshot()));
    expect(banner).toContain("red cycle");
    expect(banner).toContain("badge-verified");
    expect(banner).toContain("4 of 104 rounds");
  });

  it("flags a witness the board cannot back up", () => {
    const doc = wonSnapshot();
    doc.rounds[0] = round(1, [0, 1], "blue");
    expect(outcomeBanner(viewFromSnapshot(doc))).toContain("badge-mismatch");
  });
});

describe("boardView", () => {
  it("renders a placeholder before any game exists", () => {
    expect(boardView(null)).toContain("placeholder");
  });

  it("puts the error banner on top when the protocol broke", () => {
    const html = boardView(null, "rounds[0].color is not a color");
    expect(html).toContain("banner-error");
    expect(html).toContain("rounds[0].color is not a color");
  });

  it("keeps the stale board under the banner when a view survives", () => {
    const html = boardView(viewFromSnapshot(wonSnapshot()), "boom");
    expect(html.indexOf("banner-error")).toBeLessThan(html.indexOf("<svg"));
    expect(html).toContain("edge-witness");
  });
});
