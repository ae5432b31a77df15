// Board embedding. The blue subgraph the Builder grows is a bundle of paths
// that eventually closes into the target cycle, so the layout tracks the
// longest blue chain and pins it to a circle; everything else hangs off it
// radially. Pure function of the view, so redraws never jitter.

import { GameView, vertices } from "./store.js";

export interface Point {
  x: number;
  y: number;
}

const TAIL_STEP = 42;
const FAN_ANGLE = 0.55;

type Adjacency = Map<number, number[]>;

function addArc(adjacency: Adjacency, u: number, v: number): void {
  adjacency.set(u, [...(adjacency.get(u) ?? []), v]);
  adjacency.set(v, [...(adjacency.get(v) ?? []), u]);
}

/**
 * Split a graph of maximum degree two into ordered chains. Paths start at an
 * endpoint, cycles at their smallest vertex; vertices of higher degree are
 * skipped (the caller falls back to circle order for them).
 */
function chains(adjacency: Adjacency): number[][] {
  const out: number[][] = [];
  const seen = new Set<number>();
  const nodes = [...adjacency.keys()].sort((a, b) => a - b);
  const degree = (x: number) => adjacency.get(x)!.length;
  if (nodes.some((x) => degree(x) > 2)) return [];
  const walk = (start: number) => {
    const order = [start];
    seen.add(start);
    for (;;) {
      const next = adjacency
        .get(order[order.length - 1])!
        .find((x) => !seen.has(x));
      if (next === undefined) break;
      seen.add(next);
      order.push(next);
    }
    out.push(order);
  };
  for (const x of nodes) if (!seen.has(x) && degree(x) === 1) walk(x);
  for (const x of nodes) if (!seen.has(x)) walk(x); // the rest are cycles
  return out;
}

/**
 * Positions for every vertex of the view, on a size x size canvas. The
 * longest blue chain sits evenly on the main circle; other vertices go on the
 * same circle while the chain is short, or radially outside it once the
 * tracked cycle dominates the board.
 */
export function layoutBoard(view: GameView, size = 480): Map<number, Point> {
  const all = vertices(view);
  const center = size / 2;
  const radius = size * 0.36;
  const points = new Map<number, Point>();
  const angles = new Map<number, number>();
  const place = (x: number, angle: number, r: number) => {
    angles.set(x, angle);
    points.set(x, {
      x: Math.round(center + r * Math.cos(angle)),
      y: Math.round(center + r * Math.sin(angle)),
    });
  };

  const blue: Adjacency = new Map();
  for (const e of view.edges) if (e.color === "blue") addArc(blue, e.u, e.v);
  const core = chains(blue)
    .sort((a, b) => b.length - a.length || a[0] - b[0])
    .at(0);

  if (core === undefined || core.length < 3) {
    // Early game: no chain worth tracking, spread everyone on the circle.
    all.sort((a, b) => a - b);
    all.forEach((x, i) => place(x, (2 * Math.PI * i) / all.length - Math.PI / 2, radius));
    return points;
  }

  core.forEach((x, i) => place(x, (2 * Math.PI * i) / core.length - Math.PI / 2, radius));

  // Hang the rest off their placed neighbors, one breadth layer at a time.
  const adjacency: Adjacency = new Map();
  for (const e of view.edges) addArc(adjacency, e.u, e.v);
  if (view.proposed !== null) addArc(adjacency, view.proposed[0], view.proposed[1]);
  let frontier = [...core];
  for (let depth = 1; frontier.length > 0; depth++) {
    const layer: [number, number][] = []; // vertex, parent
    for (const parent of frontier) {
      for (const child of [...(adjacency.get(parent) ?? [])].sort((a, b) => a - b)) {
        if (!points.has(child) && !layer.some(([x]) => x === child)) {
          layer.push([child, parent]);
        }
      }
    }
    const siblings = new Map<number, number>();
    for (const [child, parent] of layer) {
      const slot = siblings.get(parent) ?? 0;
      siblings.set(parent, slot + 1);
      const fan = (slot % 2 === 0 ? 1 : -1) * Math.ceil(slot / 2) * FAN_ANGLE;
      place(child, angles.get(parent)! + fan / depth, radius + depth * TAIL_STEP);
    }
    frontier = layer.map(([x]) => x);
  }

  // Anything still unplaced has no edge to the placed part; park it outside.
  const loose = all.filter((x) => !points.has(x)).sort((a, b) => a - b);
  loose.forEach((x, i) =>
    place(x, (2 * Math.PI * i) / Math.max(loose.length, 1), radius + 2 * TAIL_STEP),
  );
  return points;
}
