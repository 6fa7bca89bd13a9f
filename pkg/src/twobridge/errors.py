"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) so the CLI can
emit machine-readable error objects.
"""


class TwoBridgeError(ValueError):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class ParseError(TwoBridgeError):
    pass


class ZeroOverZero(TwoBridgeError):
    pass


class InfinityInput(TwoBridgeError):
    pass


class IntegerSlope(TwoBridgeError):
    pass


class OutOfRange(TwoBridgeError):
    pass


class ZeroEntry(TwoBridgeError):
    pass


class DivisionCollapse(TwoBridgeError):
    pass


class BothOdd(TwoBridgeError):
    pass


class NoRepresentative(TwoBridgeError):
    pass


class NotNeighbors(TwoBridgeError):
    pass


class IterationCapExceeded(TwoBridgeError):
    """Internal error: orbit reduction did not terminate within its cap."""


class NotHyperbolic(TwoBridgeError):
    pass


class ConditionNotMet(TwoBridgeError):
    pass


class NoSolution(TwoBridgeError):
    """Internal error: the extra-split solver found zero or several solutions."""


class KindNotApplicable(TwoBridgeError):
    pass


class InvalidIndex(TwoBridgeError):
    pass


class IndexTooSmall(TwoBridgeError):
    pass


class LinkSlope(TwoBridgeError):
    pass
