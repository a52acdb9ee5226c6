"""Exception hierarchy for ring construction, ideal arithmetic and parsing."""


class PhirError(Exception):
    pass


class InvalidTable(PhirError):
    """An explicit table does not define a commutative ring with 1 != 0."""


class InfiniteIdealizationBase(PhirError):
    pass


class ZeroInMultiplicativeSet(PhirError):
    pass


class ElementNotInRing(PhirError):
    pass


class EmptyProduct(PhirError):
    pass


class ImproperIdeal(PhirError):
    pass


class InvalidIdealPair(PhirError):
    """J(+)N was requested but JM is not contained in N."""


class NonRegularDenominator(PhirError):
    pass


class UnsupportedLocalization(PhirError):
    pass


class RingMismatch(PhirError):
    pass


class UnboundedEnumeration(PhirError):
    pass


class MissingCustomEntry(PhirError):
    pass


class ShapeMismatch(PhirError):
    pass


class ParseError(PhirError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SemanticError(PhirError):
    pass
