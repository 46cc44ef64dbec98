"""Exception hierarchy shared by every module.

Domain errors are bad input (odd denominators, fractions outside (0, 1),
invariant-violating norm data).  Internal consistency errors mean two
independent computations disagreed, which is always a bug.
"""


class TwoBridgeError(Exception):
    pass


class DomainError(TwoBridgeError, ValueError):
    pass


class IndeterminateExpansion(DomainError, ZeroDivisionError):
    """A mixed-sign continued fraction hit a zero partial denominator."""


class KnotInputError(DomainError):
    """The fraction has odd denominator, so the 2-bridge link is a knot."""


class InternalConsistencyError(TwoBridgeError, RuntimeError):
    pass


class PathNotFound(InternalConsistencyError):
    pass
