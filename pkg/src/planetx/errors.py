"""Exception hierarchy shared by the generator, engine, and server."""


class PlanetXError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PlanetXError):
    """A match configuration field violates its constraints."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"config field '{field}': {message}")


class GenerationError(PlanetXError):
    """Match data could not be generated from the given inputs."""


class MatchIOError(PlanetXError):
    """A match directory is missing files or cannot be parsed."""


class IntegrityError(MatchIOError):
    """Stored content does not match its recorded hash."""


class ValidationError(PlanetXError):
    """A command payload references unknown entities or out-of-range values."""


class NotFoundError(PlanetXError):
    """A referenced match or robot does not exist."""


class LateBidError(PlanetXError):
    """A bid arrived at or after the robot's expiration tick."""


class StateError(PlanetXError):
    """A command is not legal in the current game state."""


class AuthError(PlanetXError):
    """Unknown team or invalid credentials."""
