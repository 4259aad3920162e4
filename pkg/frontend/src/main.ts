// Browser wiring: read ?server=&match=&token=&team= from the URL, start the
// poll loop, re-render the five panels from state, and hook up the forms.

import { MatchClient } from "./api.js";
import { submitBid, submitInterests, parseIdList, parseNameList } from "./forms.js";
import { renderNetworkPanel } from "./panels/network.js";
import { renderPartsPanel } from "./panels/parts.js";
import { renderSeriesPanel } from "./panels/series.js";
import { renderTreePanel } from "./panels/tree.js";
import { renderTrackerPanel } from "./panels/tracker.js";
import { startPollLoop } from "./poll.js";
import { newClientState, type ClientState } from "./state.js";
import { partsTable, seriesCards } from "./viewmodel.js";

const params = new URLSearchParams(window.location.search);
const server = params.get("server") ?? window.location.origin;
const matchId = params.get("match") ?? "";
const token = params.get("token");
const team = params.get("team");

const client = new MatchClient(server, matchId, token);
const state = newClientState();

let selectedRobot: number | null = null;
let useSiblings = true;

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

function setStatus(text: string, ok = true) {
  const el = byId("status");
  el.textContent = text;
  el.className = ok ? "status ok" : "status error";
}

function render(current: ClientState) {
  const snapshot = current.snapshot;
  byId("tracker").innerHTML = renderTrackerPanel(current);
  if (!snapshot || !snapshot.robots) return;

  const cards = seriesCards(current, { limit: 5, useSiblings });
  byId("series").innerHTML = renderSeriesPanel(cards, snapshot.num_ticks);
  if (selectedRobot === null && cards.length > 0) selectedRobot = cards[0].robot.id;
  byId("network").innerHTML = renderNetworkPanel(snapshot, selectedRobot);
  byId("tree").innerHTML = renderTreePanel(snapshot, selectedRobot);
  byId("parts").innerHTML = renderPartsPanel(partsTable(current));

  for (const node of document.querySelectorAll<SVGElement>("[data-robot]")) {
    node.addEventListener("click", () => {
      selectedRobot = Number(node.dataset.robot);
      render(state);
    });
  }
}

async function wireForms() {
  byId("bid-form").addEventListener("submit", async (event) => {
    event.preventDefault();
    const robotId = Number((byId("bid-robot") as HTMLInputElement).value);
    const raw = (byId("bid-guess") as HTMLInputElement).value.trim();
    const result = await submitBid(client, state, robotId,
      raw === "" || raw === "-1" ? "decline" : Number(raw));
    setStatus(result.message, result.ok);
    render(state);
  });
  byId("bid-decline").addEventListener("click", async () => {
    const robotId = Number((byId("bid-robot") as HTMLInputElement).value);
    const result = await submitBid(client, state, robotId, "decline");
    setStatus(result.message, result.ok);
    render(state);
  });
  byId("interest-form").addEventListener("submit", async (event) => {
    event.preventDefault();
    const robots = parseIdList((byId("interest-robots") as HTMLInputElement).value);
    const parts = parseNameList((byId("interest-parts") as HTMLInputElement).value);
    const result = await submitInterests(client, robots, parts);
    setStatus(result.message, result.ok);
  });
  byId("sibling-toggle").addEventListener("change", (event) => {
    useSiblings = (event.target as HTMLInputElement).checked;
    render(state);
  });
}

if (!matchId) {
  setStatus("missing ?match= in the URL", false);
} else {
  setStatus(`polling ${server} as ${team ?? "spectator"}`);
  void wireForms();
  startPollLoop(client, state, { onRender: render });
}
