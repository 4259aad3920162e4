// Bid and interest submission: post, surface the server's verdict verbatim.

import { isApiError, type MatchClient } from "./api.js";
import type { ClientState } from "./state.js";
import { DECLINE } from "./types.js";

export interface SubmitResult {
  ok: boolean;
  message: string;
}

export async function submitBid(
  client: MatchClient,
  state: ClientState,
  robotId: number,
  guess: number | "decline",
): Promise<SubmitResult> {
  const value = guess === "decline" ? DECLINE : guess;
  try {
    await client.bid(robotId, value);
    state.formErrors.delete(robotId);
    return { ok: true, message: `bid ${value === DECLINE ? "decline" : value} on #${robotId}` };
  } catch (err) {
    const message = isApiError(err) ? `${err.status}: ${err.message}` : String(err);
    state.formErrors.set(robotId, message); // shown inline on the robot's card
    return { ok: false, message };
  }
}

export async function submitInterests(
  client: MatchClient,
  robotIds: number[],
  partNames: string[],
): Promise<SubmitResult> {
  try {
    await client.interests(robotIds, partNames);
    return {
      ok: true,
      message: `hacker now favors ${robotIds.length} robots, ${partNames.length} parts`,
    };
  } catch (err) {
    const message = isApiError(err) ? `${err.status}: ${err.message}` : String(err);
    return { ok: false, message };
  }
}

export function parseIdList(text: string): number[] {
  return text
    .split(/[\s,;]+/)
    .filter((s) => s.length > 0)
    .map((s) => Number(s))
    .filter((n) => Number.isInteger(n) && n >= 0);
}

export function parseNameList(text: string): string[] {
  return text.split(/[\s,;]+/).filter((s) => s.length > 0);
}
