"""Shared exception types."""


class ShiftLabError(Exception):
    """Base class for all shiftlab errors."""


class UniverseMismatchError(ShiftLabError):
    """Operands live over different universes."""


class UnsupportedUniverseError(ShiftLabError):
    """The operation is not available over this universe."""


class CapExceededError(ShiftLabError):
    """An enumeration would exceed the configured block cap."""


class NotInjectiveError(ShiftLabError):
    """The cellular automaton is not injective; run check_injective first."""


class ImagingError(ShiftLabError):
    """An image/preimage construction failed its own verification."""


class SpecError(ShiftLabError):
    """Spec-file parse or resolution error, with a line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
