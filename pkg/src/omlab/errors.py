"""Exception hierarchy."""


class OmlabError(Exception):
    """Base class for all errors raised by omlab."""


class InvalidMatrix(OmlabError, ValueError):
    """Input cannot be used as a finite, non-empty complex matrix."""


class NotSquare(InvalidMatrix):
    pass


class NotHermitian(OmlabError, ValueError):
    pass


class NegativeSpectrum(OmlabError, ValueError):
    pass


class NoConvergence(OmlabError, ArithmeticError):
    pass


class OddDimension(OmlabError, ValueError):
    pass


class BlockShapeError(OmlabError, ValueError):
    """Blocks of a 2x2 operator matrix do not share one square dimension."""


class NonpositiveScale(OmlabError, ValueError):
    pass


class NotPSDInput(OmlabError, ValueError):
    pass


class NegativeEntry(OmlabError, ValueError):
    pass


class UnknownCheck(OmlabError, KeyError):
    pass


class NotApplicable(OmlabError, ValueError):
    """An inequality was evaluated outside the class it is stated for."""


class InvalidFunctionPair(OmlabError, ValueError):
    pass


class ParseError(OmlabError, ValueError):
    """Malformed JSON input; ``field`` names the offending location."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
