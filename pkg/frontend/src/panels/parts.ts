// Parts panel: one mini-chart per part, delivered part values against
// productivity revealed so far.  Quantitative parts keep their own x-range
// (0..100 vs 0..1 scales differ on purpose); categorical parts get one
// column per label.

import { fitPolynomial, evalPolynomial } from "../fit.js";
import type { PartRow } from "../viewmodel.js";
import { esc, linearScale } from "./svg.js";

const W = 190;
const H = 120;
const PAD = 24;

function quantChart(name: string, rows: PartRow[]): string {
  const values = rows.map((r) => r.x as number);
  const lo = Math.min(0, ...values);
  const hi = Math.max(1, ...values);
  const x = linearScale(lo, hi, PAD, W - 6);
  const y = linearScale(-100, 100, H - 14, 6);
  const parts = [
    `<line x1="${PAD}" y1="${y(0)}" x2="${W - 6}" y2="${y(0)}" stroke="#ccc"/>`,
  ];
  for (const row of rows) {
    parts.push(
      `<circle cx="${x(row.x as number).toFixed(1)}" cy="${y(row.y).toFixed(1)}" r="2.2" ` +
        `fill="#30475e" opacity="0.75"><title>#${row.robot}: ${esc(row.x)} -> ${row.y.toFixed(1)}</title></circle>`,
    );
  }
  // Trend line from a degree-1 fit when there is anything to fit.
  const fitted = fitPolynomial(rows.map((r) => [r.x as number, r.y]), 1, hi);
  if (fitted && fitted.coeffs.length === 2) {
    const yLo = evalPolynomial(fitted.coeffs, fitted.scale, lo);
    const yHi = evalPolynomial(fitted.coeffs, fitted.scale, hi);
    parts.push(
      `<line class="trend" x1="${x(lo)}" y1="${y(Math.max(-100, Math.min(100, yLo)))}" ` +
        `x2="${x(hi)}" y2="${y(Math.max(-100, Math.min(100, yHi)))}" stroke="#d6403a"/>`,
    );
  }
  return parts.join("");
}

function categoryChart(rows: PartRow[]): string {
  const labels = [...new Set(rows.map((r) => String(r.x)))].sort();
  const x = linearScale(-0.5, labels.length - 0.5, PAD, W - 6);
  const y = linearScale(-100, 100, H - 14, 6);
  const parts = [`<line x1="${PAD}" y1="${y(0)}" x2="${W - 6}" y2="${y(0)}" stroke="#ccc"/>`];
  labels.forEach((label, i) => {
    const group = rows.filter((r) => String(r.x) === label);
    const mean = group.reduce((acc, r) => acc + r.y, 0) / Math.max(1, group.length);
    for (const row of group) {
      parts.push(
        `<circle cx="${(x(i) + (row.robot % 7) - 3).toFixed(1)}" cy="${y(row.y).toFixed(1)}" ` +
          `r="2.2" fill="#30475e" opacity="0.7"/>`,
      );
    }
    parts.push(
      `<line x1="${x(i) - 12}" y1="${y(mean)}" x2="${x(i) + 12}" y2="${y(mean)}" ` +
        `stroke="#d6403a" stroke-width="2"/>`,
      `<text x="${x(i)}" y="${H - 3}" font-size="8" text-anchor="middle">${esc(label)}</text>`,
    );
  });
  return parts.join("");
}

export function renderPartsPanel(table: Map<string, PartRow[]>): string {
  const charts: string[] = [];
  for (const [name, rows] of table) {
    const isQuant = rows.every((r) => typeof r.x === "number");
    const body =
      rows.length === 0
        ? `<text x="${W / 2}" y="${H / 2}" font-size="9" text-anchor="middle" fill="#999">no data</text>`
        : isQuant
          ? quantChart(name, rows)
          : categoryChart(rows);
    charts.push(
      `<div class="part-card"><div class="card-title">${esc(name)}</div>` +
        `<svg viewBox="0 0 ${W} ${H}" class="part-chart" data-part="${esc(name)}">` +
        `<rect width="${W}" height="${H}" fill="#fcfcfc" stroke="#ddd"/>` +
        `<text x="3" y="${12}" font-size="8" fill="#777">+100</text>` +
        `<text x="3" y="${H - 16}" font-size="8" fill="#777">-100</text>` +
        body +
        `</svg></div>`,
    );
  }
  return charts.join("\n");
}
