"""Competitive robot-recruiting data game.

Deterministic match generation, a tick-based game engine with the
guess-the-number recruitment mechanic, biased data-leak sampling, a JSON
HTTP API for two competing teams, simulated opponents, and replayable
match logs.
"""

__version__ = "0.1.0"
