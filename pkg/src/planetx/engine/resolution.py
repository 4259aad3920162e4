"""Expiration resolution: the three recruitment rules plus the network tie-break.

Given the truth (the robot's series value at its expiration tick) and both
teams' effective guesses (a missing bid counts as a decline):

1. both decline            -> the robot powers down, nobody gets it
2. one numeric guess       -> that team wins outright (sole bidder)
3. both numeric:
   - equal distances, or both within the proximity threshold
                           -> the social network decides
   - otherwise             -> the strictly closer team wins

The network step gives each already-claimed neighbor a vote weighted by
its degree; the larger total wins, and an exact tie (including no claimed
neighbors at all) falls to a seeded coin flip.  The winner is invariant
under any positive rescaling of the weights.
"""

from .state import (
    DECLINE,
    REASON_BOTH_DECLINED,
    REASON_CLOSEST_OUTSIDE_THRESHOLD,
    REASON_SOLE_BIDDER,
)

NEEDS_NETWORK = "network"


def decide(truth: int, guess_a: int, guess_b: int, threshold: int):
    """Decision table for one robot.

    Returns (reason, winner_index) where winner_index is 0, 1, or None.
    A reason of NEEDS_NETWORK means the caller must run the network
    tie-break to pick the winner.
    """
    a_declined = guess_a == DECLINE
    b_declined = guess_b == DECLINE
    if a_declined and b_declined:
        return REASON_BOTH_DECLINED, None
    if b_declined:
        return REASON_SOLE_BIDDER, 0
    if a_declined:
        return REASON_SOLE_BIDDER, 1

    dist_a = abs(guess_a - truth)
    dist_b = abs(guess_b - truth)
    if dist_a == dist_b:
        return NEEDS_NETWORK, None
    if dist_a <= threshold and dist_b <= threshold:
        return NEEDS_NETWORK, None
    return REASON_CLOSEST_OUTSIDE_THRESHOLD, (0 if dist_a < dist_b else 1)


def network_totals(network, owner, robot_id, teams):
    """Degree-weighted vote totals over the robot's claimed neighbors."""
    totals = {team: 0 for team in teams}
    for nbr in network.neighbors(robot_id):
        team = owner.get(nbr)
        if team is not None:
            totals[team] += network.degree(nbr)
    return totals
