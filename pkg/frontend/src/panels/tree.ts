// Family-tree panel: a collapsible subtree centered on the selected robot
// (its grandparent's whole branch), rendered with native <details> nesting.

import type { Snapshot } from "../types.js";
import { esc, teamColor } from "./svg.js";

function parentOf(tree: NonNullable<Snapshot["tree"]>, node: number): number | null {
  for (const [parent, kids] of Object.entries(tree.children)) {
    if (kids.includes(node)) return Number(parent);
  }
  return null;
}

function renderNode(snapshot: Snapshot, node: number, selected: number | null): string {
  const tree = snapshot.tree!;
  const kids = tree.children[String(node)];
  if (kids === undefined) {
    const robot = (snapshot.robots ?? []).find((r) => r.id === node);
    const label = robot ? `#${robot.id} ${esc(robot.name)}` : `#${node}`;
    const color = robot
      ? robot.status === "powered_down"
        ? "#2b2b2b"
        : teamColor(snapshot.teams, robot.claimed_by)
      : "#b9b9b9";
    const mark = node === selected ? ` class="selected-robot"` : "";
    return `<li${mark}><span class="leaf" style="color:${color}" data-robot="${node}">${label}</span></li>`;
  }
  const inner = kids.map((k) => renderNode(snapshot, k, selected)).join("");
  return (
    `<li><details open><summary>ancestor ${node}</summary>` +
    `<ul>${inner}</ul></details></li>`
  );
}

export function renderTreePanel(snapshot: Snapshot, selected: number | null): string {
  const tree = snapshot.tree;
  if (!tree) return `<div class="empty">family tree not available yet</div>`;
  let root = tree.root;
  if (selected !== null) {
    // Climb two levels above the selected robot: siblings plus cousins.
    const parent = parentOf(tree, selected);
    const grandparent = parent === null ? null : parentOf(tree, parent);
    root = grandparent ?? parent ?? tree.root;
  }
  return `<ul class="family-tree">${renderNode(snapshot, root, selected)}</ul>`;
}
