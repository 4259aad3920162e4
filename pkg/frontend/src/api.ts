// Thin fetch client for the match server's JSON routes.

import type { Drop, Snapshot } from "./types.js";

export interface ApiError {
  status: number;
  message: string;
}

export class MatchClient {
  constructor(
    public baseUrl: string,
    public matchId: string,
    public token: string | null = null,
  ) {}

  private headers(): Record<string, string> {
    const h: Record<string, string> = { "content-type": "application/json" };
    if (this.token) h["authorization"] = `Bearer ${this.token}`;
    return h;
  }

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const resp = await fetch(`${this.baseUrl}${path}`, {
      method,
      headers: this.headers(),
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail = (payload as { error?: string; detail?: unknown }).error
        ?? JSON.stringify((payload as { detail?: unknown }).detail ?? payload);
      throw { status: resp.status, message: String(detail) } satisfies ApiError;
    }
    return payload;
  }

  async join(team: string): Promise<string> {
    const out = (await this.request("POST", `/matches/${this.matchId}/join`, { team })) as {
      token: string;
    };
    this.token = out.token;
    return out.token;
  }

  async publicSnapshot(): Promise<Snapshot> {
    return (await this.request("GET", `/matches/${this.matchId}/public`)) as Snapshot;
  }

  async dropsSince(cursor: number): Promise<{ drops: Drop[]; cursor: number }> {
    return (await this.request(
      "GET",
      `/matches/${this.matchId}/drops?since=${cursor}`,
    )) as { drops: Drop[]; cursor: number };
  }

  async bid(robotId: number, guess: number): Promise<unknown> {
    return this.request("POST", `/matches/${this.matchId}/bid`, {
      robot_id: robotId,
      guess,
    });
  }

  async interests(robotIds: number[], partNames: string[]): Promise<unknown> {
    return this.request("POST", `/matches/${this.matchId}/interests`, {
      robot_ids: robotIds,
      part_names: partNames,
    });
  }
}

export function isApiError(err: unknown): err is ApiError {
  return typeof err === "object" && err !== null && "status" in err && "message" in err;
}
