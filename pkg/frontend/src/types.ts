// Wire types for the match server's JSON API.

export type RobotStatus = "pending" | "claimed" | "powered_down";

export interface RobotInfo {
  id: number;
  name: string;
  expiration_tick: number;
  status: RobotStatus;
  claimed_by: string | null;
  productivity: number | null;
}

export interface Drop {
  tick: number;
  series_items: [number, number, number][]; // robot, tick, value
  part_items: [number, string, number | string][]; // robot, part, value
}

export interface TeamPrivate {
  team: string;
  bids: Record<string, number>;
  interests: { robot_ids: number[]; part_names: string[]; updated_tick: number };
  drops: Drop[];
}

export interface Snapshot {
  match_id: string;
  session_status: "lobby" | "running" | "finished";
  mode: string;
  tick: number;
  finished?: boolean;
  num_ticks: number;
  tick_seconds: number;
  num_robots?: number;
  proximity_threshold?: number;
  part_names?: string[];
  teams: string[];
  scores?: Record<string, number>;
  robots?: RobotInfo[];
  network?: { n: number; edges: [number, number][] };
  tree?: { root: number; children: Record<string, number[]> };
  you?: TeamPrivate;
}

export const DECLINE = -1;
