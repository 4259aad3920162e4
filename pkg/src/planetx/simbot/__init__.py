"""Simulated opponents for practice, testing, and balance measurement."""

from .policies import (
    BidCommand,
    BotView,
    InterestCommand,
    NetworkGreedyPolicy,
    OmniscientPolicy,
    Policy,
    ProductivityFilterPolicy,
    SeriesRegressionPolicy,
    extend_error,
    fit_guess,
    make_policy,
)
from .runner import HeadlessResult, HttpBot, run_headless

__all__ = [
    "Policy",
    "OmniscientPolicy",
    "SeriesRegressionPolicy",
    "ProductivityFilterPolicy",
    "NetworkGreedyPolicy",
    "BidCommand",
    "InterestCommand",
    "BotView",
    "extend_error",
    "make_policy",
    "fit_guess",
    "run_headless",
    "HeadlessResult",
    "HttpBot",
]
