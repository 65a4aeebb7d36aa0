"""Exception types raised across girthlab."""


class GirthlabError(Exception):
    """Base class for all girthlab errors."""


class NotAPrimePower(GirthlabError, ValueError):
    pass


class DivisionByZero(GirthlabError, ZeroDivisionError):
    pass


class IndexOutOfRange(GirthlabError, IndexError):
    pass


class ArithmeticOverflow(GirthlabError, OverflowError):
    pass


class ZeroDifference(GirthlabError, ValueError):
    """A cycle type contains a zero color difference."""


class BadShape(GirthlabError, ValueError):
    pass


class OutOfRange(GirthlabError, IndexError):
    pass


class WrongField(GirthlabError, ValueError):
    pass


class WrongDimension(GirthlabError, ValueError):
    pass


class WrongLength(GirthlabError, ValueError):
    pass


class Uncharacterized(GirthlabError, ValueError):
    """No closed-form girth-cycle characterization exists for this (k, q)."""


class ResourceLimit(GirthlabError, RuntimeError):
    pass


class NonIntegralCount(GirthlabError, ArithmeticError):
    """Per-edge cycle count times edge count is not divisible by the length.

    This can only happen if the graph is not edge-transitive, so it signals
    a bug rather than a user error.
    """


class NotAnEdge(GirthlabError, ValueError):
    pass
