"""Exception hierarchy shared by every module."""


__all__ = [
    "PretzelError",
    "NonSquarefree",
    "BadLength",
    "NegativeTwist",
    "UnknotHasNoSurfaceBasis",
    "ParseError",
    "RewriteFailure",
    "WrongGenus",
    "NonIntegerV3",
    "RouteMismatch",
    "WrongRootCount",
    "OnRoot",
    "PrecisionExhausted",
    "DegenerateDenominator",
    "TheoremViolation",
    "GoldenMismatch",
]


class PretzelError(Exception):
    """Base class for errors raised by this package."""


# algebra
class NonSquarefree(PretzelError, ArithmeticError):
    pass


# pretzel
class BadLength(PretzelError, ValueError):
    pass


class NegativeTwist(PretzelError, ValueError):
    pass


class UnknotHasNoSurfaceBasis(PretzelError, ValueError):
    pass


class ParseError(PretzelError, ValueError):
    pass


# invariants
class RewriteFailure(PretzelError, ArithmeticError):
    pass


class WrongGenus(PretzelError, ValueError):
    pass


class NonIntegerV3(PretzelError, ArithmeticError):
    pass


class RouteMismatch(PretzelError, AssertionError):
    """Two independent computations of the same invariant disagree."""

    def __init__(self, quantity, route_a, value_a, route_b, value_b):
        self.quantity = quantity
        self.routes = (route_a, route_b)
        self.values = (value_a, value_b)
        super().__init__(f"{quantity}: {route_a} gives {value_a} but {route_b} gives {value_b}")


# signature
class WrongRootCount(PretzelError, ArithmeticError):
    pass


class OnRoot(PretzelError, ValueError):
    pass


class PrecisionExhausted(PretzelError, ArithmeticError):
    pass


# obstruction
class DegenerateDenominator(PretzelError, ZeroDivisionError):
    pass


class TheoremViolation(PretzelError, AssertionError):
    pass


class GoldenMismatch(PretzelError, AssertionError):
    pass
