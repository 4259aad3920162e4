// Tiny string-SVG helpers shared by the panels.  Rendering to strings keeps
// every panel a pure function of its view model.

export function esc(text: string | number): string {
  return String(text)
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function linearScale(
  domainLo: number,
  domainHi: number,
  rangeLo: number,
  rangeHi: number,
): (x: number) => number {
  const span = domainHi - domainLo || 1;
  return (x) => rangeLo + ((x - domainLo) / span) * (rangeHi - rangeLo);
}

export const TEAM_COLORS = ["#d6403a", "#3a6fd6", "#8a8a8a"];

export function teamColor(snapshotTeams: string[], team: string | null): string {
  if (team === null) return "#b9b9b9";
  const index = snapshotTeams.indexOf(team);
  return TEAM_COLORS[index >= 0 ? index % 2 : 2];
}
