// Client-side match state: the latest snapshot plus every datum the hacker
// has delivered to this team, merged idempotently under a monotone cursor.

import type { Drop, Snapshot } from "./types.js";

export interface ClientState {
  snapshot: Snapshot | null;
  cursor: number; // highest drop tick merged so far
  series: Map<number, Map<number, number>>; // robot -> tick -> value
  parts: Map<number, Map<string, number | string>>; // robot -> part -> value
  scoreHistory: { tick: number; scores: Record<string, number> }[];
  stale: boolean; // last poll failed
  formErrors: Map<number, string>; // robot id -> last rejected-bid message
}

export function newClientState(): ClientState {
  return {
    snapshot: null,
    cursor: -1,
    series: new Map(),
    parts: new Map(),
    scoreHistory: [],
    stale: false,
    formErrors: new Map(),
  };
}

export function mergeDrops(state: ClientState, drops: Drop[]): ClientState {
  for (const drop of drops) {
    for (const [robot, tick, value] of drop.series_items) {
      let table = state.series.get(robot);
      if (!table) state.series.set(robot, (table = new Map()));
      table.set(tick, value);
    }
    for (const [robot, part, value] of drop.part_items) {
      let table = state.parts.get(robot);
      if (!table) state.parts.set(robot, (table = new Map()));
      table.set(part, value);
    }
    if (drop.tick > state.cursor) state.cursor = drop.tick;
  }
  return state;
}

export function applySnapshot(state: ClientState, snapshot: Snapshot): ClientState {
  state.snapshot = snapshot;
  if (snapshot.scores) {
    const last = state.scoreHistory[state.scoreHistory.length - 1];
    if (!last || last.tick !== snapshot.tick) {
      state.scoreHistory.push({ tick: snapshot.tick, scores: { ...snapshot.scores } });
    } else {
      last.scores = { ...snapshot.scores };
    }
  }
  return state;
}

export function seriesPointCount(state: ClientState): number {
  let total = 0;
  for (const table of state.series.values()) total += table.size;
  return total;
}
