"""Exception taxonomy shared by the library and the command line.

Each error carries a stable ``kind`` string (used in machine-readable job
reports) and the process exit code the CLI maps it to.
"""


class RealcycError(Exception):
    kind = "Error"
    exit_code = 1


class ConductorMismatch(RealcycError, ValueError):
    kind = "ConductorMismatch"
    exit_code = 9


class NotDivisible(RealcycError, ValueError):
    kind = "NotDivisible"


class DivisionByZero(RealcycError, ZeroDivisionError):
    kind = "DivisionByZero"


class DimensionMismatch(RealcycError, ValueError):
    kind = "DimensionMismatch"


class NotSquare(DimensionMismatch):
    kind = "NotSquare"


class Singular(RealcycError, ArithmeticError):
    kind = "Singular"


class ClosureCapExceeded(RealcycError):
    kind = "ClosureCapExceeded"
    exit_code = 3


class NotIrreducible(RealcycError):
    kind = "NotIrreducible"
    exit_code = 6


class NotRealValued(RealcycError):
    kind = "NotRealValued"
    exit_code = 5


class QuaternionicType(RealcycError):
    kind = "QuaternionicType"
    exit_code = 4


class NormEquationNotSolved(RealcycError):
    kind = "NormEquationNotSolved"
    exit_code = 7

    def __init__(self, mu, conductor, bound, reason=""):
        self.mu = mu
        self.conductor = conductor
        self.bound = bound
        msg = (
            f"no solution of x*conj(x) = {mu} found in Q(zeta_{conductor}) "
            f"with coefficient bound {bound}"
        )
        if reason:
            msg += f" ({reason})"
        # a solver limitation: a solution exists whenever mu comes from a
        # real-type irreducible representation
        msg += "; this is a search limit, not a proof of unsolvability"
        super().__init__(msg)


class InternalInvariantViolation(RealcycError, AssertionError):
    kind = "InternalInvariantViolation"


class IntertwinerCheckFailed(InternalInvariantViolation):
    kind = "IntertwinerCheckFailed"


class NotScalar(InternalInvariantViolation):
    kind = "NotScalar"


class MuNotReal(InternalInvariantViolation):
    kind = "MuNotReal"


class XiSearchExhausted(RealcycError):
    kind = "XiSearchExhausted"


class UnknownFixture(RealcycError, KeyError):
    kind = "UnknownFixture"
    exit_code = 10

    def __str__(self):
        return Exception.__str__(self)


class ParseError(RealcycError, ValueError):
    kind = "ParseError"
    exit_code = 2


class VerificationFailed(RealcycError):
    kind = "VerificationFailed"
    exit_code = 8
