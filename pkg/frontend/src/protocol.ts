// Wire types for the game session service. Field names mirror the JSON the
// server sends byte for byte; parseServerMessage is the single choke point
// where unknown or malformed payloads get rejected, so the rest of the app
// can trust its inputs.

export type ColorName = "red" | "blue";

export interface ConfigDoc {
  k: number;
  n: number;
  goal: string;
  bound: number;
}

export interface RoundDoc {
  i: number;
  edge: [number, number];
  color: ColorName;
  by: string;
}

export interface WitnessDoc {
  kind: string;
  edges: [number, number][];
}

export interface OutcomeDoc {
  kind: string;
  rounds_used: number;
  witness?: WitnessDoc;
}

export interface StateMessage {
  type: "state";
  id: string;
  config: ConfigDoc;
  rounds: RoundDoc[];
  rounds_used: number;
  bound: number;
  proposed: [number, number] | null;
  by?: string;
  outcome: OutcomeDoc | null;
}

export interface MoveMessage {
  type: "move";
  id: string;
  i: number;
  edge: [number, number];
  by: string;
}

export interface ColorEvent {
  type: "color";
  id: string;
  i: number;
  edge: [number, number];
  color: ColorName;
}

export interface EndMessage {
  type: "end";
  id: string;
  outcome: OutcomeDoc;
  rounds_used: number;
  bound: number;
}

export interface ErrorMessage {
  type: "error";
  error: string;
  detail: string;
}

export interface NewGameMessage {
  type: "new_game";
  id: string;
  state: StateMessage;
}

export type ServerMessage =
  | StateMessage
  | MoveMessage
  | ColorEvent
  | EndMessage
  | ErrorMessage
  | NewGameMessage;

export interface BuilderInfo {
  name: string;
  goal: string;
  description: string;
  k: string;
  n: string;
  bound: string;
}

// ---- validation ------------------------------------------------------------

export class ProtocolError extends Error {}

function fail(what: string): never {
  throw new ProtocolError(`malformed server message: ${what}`);
}

function isEdge(value: unknown): value is [number, number] {
  return (
    Array.isArray(value) &&
    value.length === 2 &&
    value.every((x) => Number.isInteger(x))
  );
}

function checkEdge(value: unknown, where: string): [number, number] {
  if (!isEdge(value)) fail(`${where} is not an [u, v] pair`);
  return value;
}

function checkColor(value: unknown, where: string): ColorName {
  if (value !== "red" && value !== "blue") fail(`${where} is not a color`);
  return value;
}

function checkInt(value: unknown, where: string): number {
  if (!Number.isInteger(value)) fail(`${where} is not an integer`);
  return value as number;
}

function checkStr(value: unknown, where: string): string {
  if (typeof value !== "string") fail(`${where} is not a string`);
  return value;
}

function checkConfig(value: unknown): ConfigDoc {
  const doc = value as Partial<ConfigDoc> | null;
  if (doc === null || typeof doc !== "object") fail("config missing");
  return {
    k: checkInt(doc.k, "config.k"),
    n: checkInt(doc.n, "config.n"),
    goal: checkStr(doc.goal, "config.goal"),
    bound: checkInt(doc.bound, "config.bound"),
  };
}

function checkOutcome(value: unknown): OutcomeDoc | null {
  if (value === null || value === undefined) return null;
  const doc = value as Partial<OutcomeDoc>;
  if (typeof doc !== "object") fail("outcome is not an object");
  const out: OutcomeDoc = {
    kind: checkStr(doc.kind, "outcome.kind"),
    rounds_used: checkInt(doc.rounds_used, "outcome.rounds_used"),
  };
  if (doc.witness !== undefined) {
    const w = doc.witness as Partial<WitnessDoc>;
    out.witness = {
      kind: checkStr(w.kind, "witness.kind"),
      edges: (Array.isArray(w.edges) ? w.edges : fail("witness.edges")).map(
        (e, i) => checkEdge(e, `witness.edges[${i}]`),
      ),
    };
  }
  return out;
}

function checkState(doc: Record<string, unknown>): StateMessage {
  if (!Array.isArray(doc.rounds)) fail("rounds is not a list");
  const message: StateMessage = {
    type: "state",
    id: checkStr(doc.id, "id"),
    config: checkConfig(doc.config),
    rounds: doc.rounds.map((r, i) => ({
      i: checkInt(r.i, `rounds[${i}].i`),
      edge: checkEdge(r.edge, `rounds[${i}].edge`),
      color: checkColor(r.color, `rounds[${i}].color`),
      by: checkStr(r.by, `rounds[${i}].by`),
    })),
    rounds_used: checkInt(doc.rounds_used, "rounds_used"),
    bound: checkInt(doc.bound, "bound"),
    proposed: doc.proposed === null ? null : checkEdge(doc.proposed, "proposed"),
    outcome: checkOutcome(doc.outcome),
  };
  if (doc.by !== undefined) message.by = checkStr(doc.by, "by");
  return message;
}

/** Check an untrusted payload against the protocol, narrowing its type. */
export function parseServerMessage(raw: unknown): ServerMessage {
  if (raw === null || typeof raw !== "object") fail("not an object");
  const doc = raw as Record<string, unknown>;
  switch (doc.type) {
    case "state":
      return checkState(doc);
    case "move":
      return {
        type: "move",
        id: checkStr(doc.id, "id"),
        i: checkInt(doc.i, "i"),
        edge: checkEdge(doc.edge, "edge"),
        by: checkStr(doc.by, "by"),
      };
    case "color":
      return {
        type: "color",
        id: checkStr(doc.id, "id"),
        i: checkInt(doc.i, "i"),
        edge: checkEdge(doc.edge, "edge"),
        color: checkColor(doc.color, "color"),
      };
    case "end": {
      const outcome = checkOutcome(doc.outcome);
      if (outcome === null) fail("end without outcome");
      return {
        type: "end",
        id: checkStr(doc.id, "id"),
        outcome,
        rounds_used: checkInt(doc.rounds_used, "rounds_used"),
        bound: checkInt(doc.bound, "bound"),
      };
    }
    case "error":
      return {
        type: "error",
        error: checkStr(doc.error, "error"),
        detail: checkStr(doc.detail, "detail"),
      };
    case "new_game": {
      const state = doc.state as Record<string, unknown> | null;
      if (state === null || typeof state !== "object") fail("state missing");
      return {
        type: "new_game",
        id: checkStr(doc.id, "id"),
        state: checkState(state),
      };
    }
    default:
      fail(`unknown type ${JSON.stringify(doc.type)}`);
  }
}
