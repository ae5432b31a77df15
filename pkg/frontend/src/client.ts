// Thin fetch wrapper around the session service. Every response body goes
// through parseServerMessage, so callers only ever see well-formed protocol
// objects or a thrown ServiceError / ProtocolError.

import {
  BuilderInfo,
  ColorName,
  EndMessage,
  MoveMessage,
  NewGameMessage,
  StateMessage,
  parseServerMessage,
} from "./protocol.js";

export interface NewGameParams {
  k: number;
  n: number;
  goal: string;
  builder?: string;
}

/** An error response from the service, keeping its code and HTTP status. */
export class ServiceError extends Error {
  constructor(
    readonly code: string,
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SessionClient {
  private fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    // Bind, because the global fetch refuses to run with a bare reference.
    this.fetchFn = fetchFn ?? ((url, init) => globalThis.fetch(url, init));
  }

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      const doc = body as { error?: string; detail?: string };
      throw new ServiceError(
        doc.error ?? "HttpError",
        response.status,
        doc.detail ?? `request failed with status ${response.status}`,
      );
    }
    return body;
  }

  private async post(path: string, payload: unknown): Promise<unknown> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  async builders(): Promise<BuilderInfo[]> {
    const doc = (await this.request("/builders")) as { builders: BuilderInfo[] };
    return doc.builders;
  }

  async createGame(params: NewGameParams): Promise<NewGameMessage> {
    const message = parseServerMessage(await this.post("/games", params));
    if (message.type !== "new_game") {
      throw new ServiceError("BadResponse", 200, `expected new_game, got ${message.type}`);
    }
    return message;
  }

  async getState(id: string): Promise<StateMessage> {
    const message = parseServerMessage(await this.request(`/games/${id}`));
    if (message.type !== "state") {
      throw new ServiceError("BadResponse", 200, `expected state, got ${message.type}`);
    }
    return message;
  }

  async submitColor(
    id: string,
    edge: [number, number],
    color: ColorName,
  ): Promise<MoveMessage | EndMessage> {
    const message = parseServerMessage(
      await this.post(`/games/${id}/color`, { edge, color }),
    );
    if (message.type !== "move" && message.type !== "end") {
      throw new ServiceError("BadResponse", 200, `expected move or end, got ${message.type}`);
    }
    return message;
  }

  /** ws:// address of the event channel for one session. */
  eventsUrl(id: string): string {
    return this.baseUrl.replace(/^http/, "ws") + `/games/${id}/events`;
  }
}
