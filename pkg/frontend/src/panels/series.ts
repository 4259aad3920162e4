// Friendship-game panel: one card per soon-expiring robot with a scatter of
// delivered points, the fitted curve, the expiration marker, and the
// prediction readout.  Small multiples, soonest deadline first.

import type { SeriesCard } from "../viewmodel.js";
import { esc, linearScale } from "./svg.js";

const W = 260;
const H = 150;
const PAD = 26;

export function renderSeriesCard(card: SeriesCard, numTicks: number): string {
  const x = linearScale(0, numTicks - 1, PAD, W - 8);
  const y = linearScale(0, 100, H - 18, 8);
  const parts: string[] = [];

  parts.push(
    `<svg class="series-chart" viewBox="0 0 ${W} ${H}" data-robot="${card.robot.id}">`,
    `<rect x="0" y="0" width="${W}" height="${H}" fill="#fcfcfc" stroke="#ddd"/>`,
    `<line x1="${PAD}" y1="${y(0)}" x2="${W - 8}" y2="${y(0)}" stroke="#bbb"/>`,
    `<line x1="${PAD}" y1="${y(0)}" x2="${PAD}" y2="${y(100)}" stroke="#bbb"/>`,
    `<text x="4" y="${y(100) + 4}" font-size="8">100</text>`,
    `<text x="4" y="${y(0) + 3}" font-size="8">0</text>`,
  );

  // Expiration marker line.
  const xexp = x(card.robot.expiration_tick);
  parts.push(
    `<line class="expiry" x1="${xexp}" y1="${y(0)}" x2="${xexp}" y2="${y(100)}" ` +
      `stroke="#d6403a" stroke-dasharray="4 2"/>`,
    `<text x="${xexp + 2}" y="${y(100) + 10}" font-size="8" fill="#d6403a">` +
      `t=${card.robot.expiration_tick}</text>`,
  );

  if (card.prediction) {
    const samples: string[] = [];
    for (let t = 0; t < numTicks; t += 2) {
      const v = Math.min(110, Math.max(-10, card.prediction.curve(t)));
      samples.push(`${x(t).toFixed(1)},${y(v).toFixed(1)}`);
    }
    parts.push(`<polyline points="${samples.join(" ")}" fill="none" stroke="#3a6fd6"/>`);
  }

  for (const point of card.points) {
    parts.push(
      `<circle class="pt${point.sibling ? " sibling" : ""}" cx="${x(point.t).toFixed(1)}" ` +
        `cy="${y(point.v).toFixed(1)}" r="2.4" ` +
        `fill="${point.sibling ? "#9ecae1" : "#30475e"}"/>`,
    );
  }
  parts.push(`</svg>`);

  const readout = card.prediction
    ? `predict <b>${card.prediction.value}</b>` +
      (card.prediction.lowConfidence
        ? ` <span class="low-confidence">(low confidence, deg ${card.prediction.degreeUsed})</span>`
        : "")
    : `<span class="low-confidence">no data yet</span>`;
  const bid = card.bid === null ? "" : ` &middot; your bid: <b>${card.bid}</b>`;
  const error = card.error ? `<div class="bid-error">${esc(card.error)}</div>` : "";

  return (
    `<div class="series-card" data-robot="${card.robot.id}">` +
    `<div class="card-title">#${card.robot.id} ${esc(card.robot.name)} ` +
    `<span class="deadline">expires t=${card.robot.expiration_tick}</span></div>` +
    parts.join("") +
    `<div class="readout">${readout}${bid}</div>` +
    error +
    `</div>`
  );
}

export function renderSeriesPanel(cards: SeriesCard[], numTicks: number): string {
  if (cards.length === 0) {
    return `<div class="empty">no pending robots</div>`;
  }
  return cards.map((card) => renderSeriesCard(card, numTicks)).join("\n");
}
