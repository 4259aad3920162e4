"""HTTP server: JSON API, per-team tokens, wall-clock tick scheduling."""

from .app import create_app
from .sessions import MODE_LIVE, MODE_MANUAL, MatchSession, SessionRegistry

__all__ = ["create_app", "SessionRegistry", "MatchSession", "MODE_LIVE", "MODE_MANUAL"]
