"""Exception hierarchy shared by the library and the CLI.

Exit-code mapping used by the CLI:
    ConfigError          -> 2
    FeasibilityError     -> 3
    NumericalGuardError  -> 4
"""


class PhotonForcesError(Exception):
    """Base class for all library errors."""


class ConfigError(PhotonForcesError):
    """Invalid, unknown, or out-of-range configuration input."""


class FeasibilityError(PhotonForcesError):
    """Physically infeasible parameter combination (e.g. recoil mass <= 0)."""


class NumericalGuardError(PhotonForcesError):
    """A numerical guard tripped (degenerate resonance, identity violation)."""
