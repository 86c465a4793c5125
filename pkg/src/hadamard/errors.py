"""Exception hierarchy shared by every layer of the package."""


class HadamardError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(HadamardError):
    """Operands live in different ring contexts."""


class ArityError(HadamardError):
    """A coordinate vector, point or ring has the wrong number of entries."""


class MathDomainError(HadamardError):
    """An operation is undefined for its (well-formed) arguments."""


class ZeroPolynomialError(MathDomainError):
    """The zero polynomial has no leading term."""


class InvalidPointError(MathDomainError):
    """All coordinates of a projective point are zero."""


class UndefinedProductError(MathDomainError):
    """Every coordinate product of two points vanishes."""


class HomogeneityError(MathDomainError):
    """A generator entering a projective operation is not homogeneous."""


class BudgetExceededError(HadamardError):
    """A Groebner basis computation exceeded its pair-reduction cap."""


class ParseError(HadamardError):
    """Malformed input text.  Carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ScriptError(ParseError):
    """A script is syntactically valid but does not resolve (unbound names, bad kinds)."""
