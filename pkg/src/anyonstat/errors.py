"""Exception types shared across the package."""


class AnyonStatError(ValueError):
    """Base class for invalid inputs to anyonstat operations."""


class InvalidStrandCount(AnyonStatError):
    pass


class IndexOutOfRange(AnyonStatError):
    pass


class StrandMismatch(AnyonStatError):
    pass


class MoveNotApplicable(AnyonStatError):
    pass


class LengthMismatch(AnyonStatError):
    pass


class GridMismatch(AnyonStatError):
    pass


class KappaMismatch(AnyonStatError):
    pass


class NotGridAligned(AnyonStatError):
    """Raised when a rotation angle is not an integer multiple of the grid step."""
