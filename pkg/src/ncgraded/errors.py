"""Exception hierarchy shared by every ncgraded module."""


class NCGradedError(Exception):
    """Base class for all library errors."""


class DivisionByZero(NCGradedError, ZeroDivisionError):
    pass


class NonSquare(NCGradedError, ValueError):
    pass


class SingularMatrix(NCGradedError, ValueError):
    pass


class SingularSystem(NCGradedError, ValueError):
    pass


class ScalarParseError(NCGradedError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class PresentationSyntaxError(NCGradedError, ValueError):
    """Malformed presentation text; carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class UnknownGenerator(NCGradedError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown generator"


class InhomogeneousRelation(NCGradedError, ValueError):
    pass


class InhomogeneousInput(NCGradedError, ValueError):
    pass


class DimensionMismatch(NCGradedError, ValueError):
    pass


class NonQuadratic(NCGradedError, ValueError):
    pass


class NotDegenerate(NCGradedError, ValueError):
    pass


class ZeroConstantTerm(NCGradedError, ValueError):
    pass


class TooLarge(NCGradedError, ValueError):
    pass


class IrrationalSpectrum(NCGradedError, ValueError):
    pass


class RepeatedRoots(NCGradedError, ValueError):
    pass


class OffTriangle(NCGradedError, ValueError):
    pass


class NotNormalWord(NCGradedError, ValueError):
    pass


class UnknownSelector(NCGradedError, ValueError):
    pass
