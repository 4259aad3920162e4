// Game tracker: score lines over ticks, current claims, and the countdown.

import type { ClientState } from "../state.js";
import { claimCounts, countdownSeconds } from "../viewmodel.js";
import { esc, linearScale, teamColor } from "./svg.js";

const W = 420;
const H = 130;
const PAD = 34;

export function renderTrackerPanel(state: ClientState): string {
  const snapshot = state.snapshot;
  if (!snapshot || !snapshot.scores) return `<div class="empty">waiting for the match</div>`;

  const history = state.scoreHistory;
  const teams = snapshot.teams;
  const values = history.flatMap((h) => teams.map((t) => h.scores[t] ?? 0));
  const lo = Math.min(0, ...values);
  const hi = Math.max(10, ...values);
  const x = linearScale(0, snapshot.num_ticks, PAD, W - 8);
  const y = linearScale(lo, hi, H - 16, 8);

  const lines = teams
    .map((team) => {
      const pts = history
        .map((h) => `${x(h.tick).toFixed(1)},${y(h.scores[team] ?? 0).toFixed(1)}`)
        .join(" ");
      return `<polyline points="${pts}" fill="none" stroke="${teamColor(teams, team)}" stroke-width="1.6"/>`;
    })
    .join("");

  const counts = claimCounts(snapshot);
  const seconds = Math.round(countdownSeconds(snapshot));
  const scoreboard = teams
    .map(
      (team) =>
        `<span class="score" style="color:${teamColor(teams, team)}">${esc(team)}: ` +
        `<b>${(snapshot.scores![team] ?? 0).toFixed(1)}</b> (${counts[team]} robots)</span>`,
    )
    .join(" &middot; ");

  return (
    `<div class="tracker-scores">${scoreboard} &middot; ` +
    `<span class="countdown">t=${snapshot.tick}/${snapshot.num_ticks}, ` +
    `${seconds}s left</span> &middot; ` +
    `<span class="powered">powered down: ${counts.powered_down}</span>` +
    (state.stale ? ` <span class="stale-badge">stale</span>` : "") +
    `</div>` +
    `<svg class="tracker-chart" viewBox="0 0 ${W} ${H}">` +
    `<rect width="${W}" height="${H}" fill="#fcfcfc" stroke="#ddd"/>` +
    `<line x1="${PAD}" y1="${y(0)}" x2="${W - 8}" y2="${y(0)}" stroke="#bbb"/>` +
    `<text x="4" y="${y(hi) + 4}" font-size="8">${hi.toFixed(0)}</text>` +
    `<text x="4" y="${y(lo) + 3}" font-size="8">${lo.toFixed(0)}</text>` +
    lines +
    `</svg>`
  );
}
