// Pure derivations from client state: everything the panels draw.

import { fitAndPredict, type FitResult } from "./fit.js";
import type { ClientState } from "./state.js";
import type { RobotInfo, Snapshot } from "./types.js";

export interface SeriesPoint {
  t: number;
  v: number;
  sibling: boolean; // borrowed from a family-tree sibling, not this robot
}

export interface SeriesCard {
  robot: RobotInfo;
  points: SeriesPoint[];
  prediction: FitResult | null;
  bid: number | null;
  error: string | null;
}

export function upcomingExpirations(snapshot: Snapshot, limit = 5): RobotInfo[] {
  const robots = snapshot.robots ?? [];
  return robots
    .filter((r) => r.status === "pending" && r.expiration_tick > snapshot.tick)
    .sort((a, b) => a.expiration_tick - b.expiration_tick || a.id - b.id)
    .slice(0, limit);
}

export function treeSiblings(snapshot: Snapshot, robotId: number): number[] {
  const tree = snapshot.tree;
  if (!tree) return [];
  for (const kids of Object.values(tree.children)) {
    if (kids.includes(robotId)) {
      return kids.filter((k) => k !== robotId && !(String(k) in tree.children));
    }
  }
  return [];
}

export function robotPoints(
  state: ClientState,
  robotId: number,
  includeSiblings: boolean,
): SeriesPoint[] {
  const points: SeriesPoint[] = [];
  for (const [t, v] of state.series.get(robotId) ?? []) {
    points.push({ t, v, sibling: false });
  }
  if (includeSiblings && state.snapshot) {
    for (const sib of treeSiblings(state.snapshot, robotId)) {
      for (const [t, v] of state.series.get(sib) ?? []) {
        points.push({ t, v, sibling: true });
      }
    }
  }
  return points.sort((a, b) => a.t - b.t);
}

export function seriesCards(
  state: ClientState,
  options: { limit?: number; useSiblings?: boolean; degree?: number } = {},
): SeriesCard[] {
  const snapshot = state.snapshot;
  if (!snapshot) return [];
  const degree = options.degree ?? 4;
  return upcomingExpirations(snapshot, options.limit ?? 5).map((robot) => {
    const points = robotPoints(state, robot.id, options.useSiblings ?? true);
    const prediction = fitAndPredict(
      points.map((p) => [p.t, p.v] as [number, number]),
      degree,
      robot.expiration_tick,
    );
    const bid = snapshot.you?.bids[String(robot.id)] ?? null;
    return {
      robot,
      points,
      prediction,
      bid,
      error: state.formErrors.get(robot.id) ?? null,
    };
  });
}

export function degreesFromEdges(edges: [number, number][]): Map<number, number> {
  const degrees = new Map<number, number>();
  for (const [u, v] of edges) {
    degrees.set(u, (degrees.get(u) ?? 0) + 1);
    degrees.set(v, (degrees.get(v) ?? 0) + 1);
  }
  return degrees;
}

export interface PartRow {
  x: number | string;
  y: number; // revealed productivity
  robot: number;
}

export function partsTable(state: ClientState): Map<string, PartRow[]> {
  const table = new Map<string, PartRow[]>();
  const snapshot = state.snapshot;
  if (!snapshot?.robots) return table;
  for (const name of snapshot.part_names ?? []) table.set(name, []);
  for (const robot of snapshot.robots) {
    if (robot.productivity === null) continue;
    const known = state.parts.get(robot.id);
    if (!known) continue;
    for (const [part, value] of known) {
      let rows = table.get(part);
      if (!rows) table.set(part, (rows = []));
      rows.push({ x: value, y: robot.productivity, robot: robot.id });
    }
  }
  return table;
}

export function countdownSeconds(snapshot: Snapshot): number {
  return Math.max(0, (snapshot.num_ticks - snapshot.tick) * snapshot.tick_seconds);
}

export function claimCounts(snapshot: Snapshot): Record<string, number> {
  const counts: Record<string, number> = { powered_down: 0 };
  for (const team of snapshot.teams) counts[team] = 0;
  for (const robot of snapshot.robots ?? []) {
    if (robot.status === "claimed" && robot.claimed_by) counts[robot.claimed_by]++;
    if (robot.status === "powered_down") counts.powered_down++;
  }
  return counts;
}
