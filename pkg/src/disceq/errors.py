"""Exception hierarchy shared by every layer of the package."""


class DiscEqError(Exception):
    """Base class for all errors raised by disceq."""


class ParseError(DiscEqError):
    pass


class CharacteristicError(DiscEqError):
    """The relation ideal meets the integers nontrivially (or contains 1)."""


class OwnerMismatch(DiscEqError):
    pass


class DomainMismatch(DiscEqError):
    pass


class DimensionMismatch(DiscEqError):
    pass


class NonMonic(DiscEqError):
    pass


class NotSubmodule(DiscEqError):
    pass


class NotIntegral(DiscEqError):
    pass


class CoefficientNotInRing(DiscEqError):
    pass


class UnsupportedBase(DiscEqError):
    pass


class VerificationFailed(DiscEqError):
    pass


class RankDeficient(DiscEqError):
    pass


class NotClosed(DiscEqError):
    def __init__(self, i, j, msg=None):
        self.pair = (i, j)
        super().__init__(msg or f"product of generators {i} and {j} is not in the module")


class DegreeMismatch(DiscEqError):
    pass


class DegenerateInput(DiscEqError):
    pass


class NotPrimitive(DiscEqError):
    pass


class StrategyUnsupported(DiscEqError):
    pass


class ZeroDelta(DiscEqError):
    pass


class UnsupportedDegree(DiscEqError):
    pass


class ConditionFailure(DiscEqError):
    """A finiteness hypothesis of the solver is violated.

    ``condition`` names the failed hypothesis: ``"e10.1.2m"`` for the
    polynomial solver, ``"e10.1.5m"`` for the order solver.
    """

    def __init__(self, condition, msg):
        self.condition = condition
        super().__init__(msg)
