// Poll-and-merge: one snapshot fetch plus a cursor-bounded drops fetch,
// merged idempotently.  One poll in flight at a time; failures mark the
// state stale and back off exponentially until the next success.

import type { MatchClient } from "./api.js";
import { applySnapshot, mergeDrops, type ClientState } from "./state.js";

export async function pollAndMerge(client: MatchClient, state: ClientState): Promise<ClientState> {
  const snapshot = await client.publicSnapshot();
  applySnapshot(state, snapshot);
  if (snapshot.session_status !== "lobby" && client.token) {
    const got = await client.dropsSince(state.cursor);
    mergeDrops(state, got.drops);
  }
  state.stale = false;
  return state;
}

export interface PollLoopOptions {
  onRender: (state: ClientState) => void;
  jitter?: () => number; // defaults to +-10%
  setTimer?: (fn: () => void, ms: number) => void;
}

export function startPollLoop(
  client: MatchClient,
  state: ClientState,
  options: PollLoopOptions,
): () => void {
  const setTimer = options.setTimer ?? ((fn, ms) => setTimeout(fn, ms));
  const jitter = options.jitter ?? (() => 0.9 + Math.random() * 0.2);
  let stopped = false;
  let inFlight = false;
  let backoff = 1;

  const periodMs = () => {
    const tickSeconds = state.snapshot?.tick_seconds ?? 1;
    return Math.max(100, tickSeconds * 1000 * jitter() * backoff);
  };

  const cycle = async () => {
    if (stopped) return;
    if (!inFlight) {
      inFlight = true;
      try {
        await pollAndMerge(client, state);
        backoff = 1;
      } catch {
        state.stale = true;
        backoff = Math.min(backoff * 2, 8);
      } finally {
        inFlight = false;
        options.onRender(state);
      }
    }
    if (!stopped && state.snapshot?.session_status !== "finished") {
      setTimer(cycle, periodMs());
    }
  };
  void cycle();
  return () => {
    stopped = true;
  };
}
