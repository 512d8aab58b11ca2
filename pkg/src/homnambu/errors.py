"""Exception hierarchy shared by every module of the package."""


class HomNambuError(Exception):
    pass


class ArityMismatch(HomNambuError, ValueError):
    pass


class DimMismatch(HomNambuError, ValueError):
    pass


class IndexOutOfRange(HomNambuError, IndexError):
    pass


class NotASubspace(HomNambuError):
    """A vector expected to lie in a span does not."""


class NotAMorphism(HomNambuError):
    pass


class NotLeibniz(HomNambuError):
    pass


class NotMultiplicative(HomNambuError):
    pass


class TwistCommutationFailure(HomNambuError):
    pass


class NotFixedPoint(HomNambuError):
    pass


class NotADerivation(HomNambuError):
    """A map built to be a derivation failed the derivation test."""


class NotARepresentation(HomNambuError):
    pass


class NotACocycle(HomNambuError):
    pass


class ParseError(HomNambuError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class RangeError(ParseError):
    pass


class DuplicateKey(ParseError):
    pass
