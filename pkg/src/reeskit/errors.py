"""Exception types shared across reeskit."""


class ReesError(Exception):
    """Base class for all errors raised by reeskit."""


class ExponentOverflow(ReesError, OverflowError):
    pass


class NotDivisible(ReesError, ArithmeticError):
    pass


class EqualTerms(ReesError, ValueError):
    pass


class InvalidParams(ReesError, ValueError):
    pass


class NotMinimallyGenerated(ReesError, ValueError):
    pass


class NotTriGeneratedShape(ReesError, ValueError):
    pass


class InconsistentSequences(ReesError, AssertionError):
    """The running max/min updates of the two remainder sequences disagree."""


class FewerThanThreeGenerators(ReesError, ValueError):
    pass


class AlreadyAugmented(ReesError, ValueError):
    pass


class NoSecondEdge(ReesError, LookupError):
    pass


class IndexOutOfRange(ReesError, IndexError):
    pass


class NotInDelta(ReesError, KeyError):
    pass


class AlreadyMinimal(ReesError, ValueError):
    pass


class NonUniquePreimage(ReesError, ValueError):
    pass


class NonBinomialRemainder(ReesError, AssertionError):
    pass


class UnknownLabel(ReesError, KeyError):
    pass


class ParseError(ReesError, ValueError):
    def __init__(self, message: str, position: int, expected: str):
        super().__init__(f"{message} at position {position}: expected {expected}")
        self.position = position
        self.expected = expected


class WrongVariable(ParseError):
    pass
