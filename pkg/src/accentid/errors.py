"""Exception hierarchy shared across the pipeline.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
NumericalError -> 4.
"""


class AccentIdError(Exception):
    """Base class for all package errors."""


class ConfigError(AccentIdError):
    """Invalid or contradictory run configuration."""


class DataError(AccentIdError):
    """Missing or malformed input data (manifests, audio, transcripts)."""


class NumericalError(AccentIdError):
    """A numerical routine failed to converge or produced invalid output."""
