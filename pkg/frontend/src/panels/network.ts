// Social-network panel: node-link view.  Hubs sit near the center of a
// deterministic sunflower spiral (high degree first), node size tracks
// degree, fill tracks the claiming team.

import type { Snapshot } from "../types.js";
import { degreesFromEdges } from "../viewmodel.js";
import { esc, teamColor } from "./svg.js";

const W = 420;
const H = 420;
const GOLDEN_ANGLE = Math.PI * (3 - Math.sqrt(5));

export function spiralLayout(order: number[]): Map<number, { x: number; y: number }> {
  const positions = new Map<number, { x: number; y: number }>();
  const maxRadius = Math.min(W, H) / 2 - 16;
  order.forEach((node, i) => {
    const r = maxRadius * Math.sqrt((i + 0.5) / order.length);
    const a = i * GOLDEN_ANGLE;
    positions.set(node, { x: W / 2 + r * Math.cos(a), y: H / 2 + r * Math.sin(a) });
  });
  return positions;
}

export function renderNetworkPanel(snapshot: Snapshot, highlight: number | null = null): string {
  const network = snapshot.network;
  const robots = snapshot.robots ?? [];
  if (!network) return `<div class="empty">network not available yet</div>`;

  const degrees = degreesFromEdges(network.edges);
  const byDegree = robots
    .map((r) => r.id)
    .sort((a, b) => (degrees.get(b) ?? 0) - (degrees.get(a) ?? 0) || a - b);
  const pos = spiralLayout(byDegree);

  const parts: string[] = [
    `<svg class="network-chart" viewBox="0 0 ${W} ${H}">`,
    `<rect width="${W}" height="${H}" fill="#fcfcfc" stroke="#ddd"/>`,
  ];
  for (const [u, v] of network.edges) {
    const a = pos.get(u);
    const b = pos.get(v);
    if (!a || !b) continue;
    const hot = highlight !== null && (u === highlight || v === highlight);
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" ` +
        `y2="${b.y.toFixed(1)}" stroke="${hot ? "#d6403a" : "#ccc"}" ` +
        `stroke-width="${hot ? 1.6 : 0.6}"/>`,
    );
  }
  for (const robot of robots) {
    const p = pos.get(robot.id);
    if (!p) continue;
    const degree = degrees.get(robot.id) ?? 0;
    const radius = 2.5 + Math.sqrt(degree) * 1.6;
    const fill =
      robot.status === "powered_down" ? "#2b2b2b" : teamColor(snapshot.teams, robot.claimed_by);
    const ring = robot.id === highlight ? ` stroke="#d6403a" stroke-width="2"` : ` stroke="#666" stroke-width="0.4"`;
    parts.push(
      `<circle class="robot-node" data-robot="${robot.id}" cx="${p.x.toFixed(1)}" ` +
        `cy="${p.y.toFixed(1)}" r="${radius.toFixed(1)}" fill="${fill}"${ring}>` +
        `<title>#${robot.id} ${esc(robot.name)} (degree ${degree}, expires t=${robot.expiration_tick})</title>` +
        `</circle>`,
    );
  }
  parts.push(`</svg>`);
  return parts.join("");
}
