"""Exception types shared across the package."""


class OneBitError(Exception):
    """Base class for package-specific failures."""


class DatasetFormatError(OneBitError):
    """Malformed dataset file; the message names the offending byte offset."""


class BudgetError(OneBitError):
    """An action would exceed the supervision-bit budget."""


class ProtocolError(OneBitError):
    """Illegal annotation transition (re-query, querying a labeled sample, ...)."""


class CheckpointError(OneBitError):
    """Unreadable checkpoint file or architecture mismatch on load."""


class TrainingError(OneBitError):
    """Training produced non-finite gradients."""


class ConfigError(OneBitError):
    """Invalid experiment config; ``pointer`` locates the offending key."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")
