"""Exception hierarchy shared by every subpackage."""


class GBShiftError(Exception):
    """Base class for all errors raised by gbshift."""


class NonzeroRemainder(GBShiftError, ArithmeticError):
    """A division that was required to be exact left a remainder."""


class ZeroRoot(GBShiftError, ValueError):
    """A factored polynomial normalized by q(0) = 1 cannot have the root 0."""


class CenterMismatch(GBShiftError, ValueError):
    pass


class NonzeroCenterForExpPoly(GBShiftError, ValueError):
    pass


class NoSolution(GBShiftError, ArithmeticError):
    pass


class ConstantPolynomial(GBShiftError, ValueError):
    pass


class ReconstructionInconsistent(GBShiftError, ArithmeticError):
    pass


class OrderTooSmall(GBShiftError, ValueError):
    pass


class CriterionFailed(GBShiftError, ValueError):
    pass


class RestrictedMatrixSingular(GBShiftError, ArithmeticError):
    pass


class ZeroFunctional(GBShiftError, ValueError):
    pass


class SingularJetMatrix(GBShiftError, ArithmeticError):
    """The Duhamel jet matrix is singular.

    ``criterion`` holds the exact value of P(D)(f)(lambda) so that callers can
    put it in an audit report.
    """

    def __init__(self, message, criterion=None):
        super().__init__(message)
        self.criterion = criterion


class ExprSyntaxError(GBShiftError, SyntaxError):
    """Parse failure carrying the character offset of the offending token."""

    def __init__(self, message, text="", offset=0):
        super().__init__(f"{message} at offset {offset}")
        self.text = text
        self.offset = offset
