"""Exception types used across the library.

Deliberate failures raise a subclass of :class:`SparsinvError`; builtin
exceptions only escape for genuine programming mistakes.
"""


class SparsinvError(Exception):
    """Base class for every error this library raises on purpose."""


# -- finite fields ------------------------------------------------------

class NotPrime(SparsinvError):
    pass


class NotIrreducible(SparsinvError):
    pass


class DegreeMismatch(SparsinvError):
    pass


class DivisionByZero(SparsinvError, ZeroDivisionError):
    pass


class ContextMismatch(SparsinvError):
    pass


class NotADivisor(SparsinvError):
    pass


# -- polynomials --------------------------------------------------------

class VariableCountMismatch(SparsinvError):
    pass


class ExponentOverflow(SparsinvError):
    pass


class DimensionMismatch(SparsinvError):
    pass


class ShapeMismatch(SparsinvError):
    pass


class NotLinear(SparsinvError):
    pass


class DependentBasis(SparsinvError):
    pass


# -- matrices and groups ------------------------------------------------

class EqualIndices(SparsinvError):
    pass


class ZeroScalar(SparsinvError):
    pass


class Singular(SparsinvError):
    pass


class SizeMismatch(SparsinvError):
    pass


class SingularGenerator(SparsinvError):
    pass


class ClosureCapExceeded(SparsinvError):
    """Group enumeration hit the element cap: too large (or treated as such)."""

    def __init__(self, cap, message=None):
        super().__init__(message or f"closure exceeded the cap of {cap} elements")
        self.cap = cap


class StateSpaceTooLarge(SparsinvError):
    pass


# -- sparsity patterns ---------------------------------------------------

class PatternSyntaxError(SparsinvError):
    """Parse failure in a pattern or matrix document, with location info."""

    def __init__(self, line, column, expected):
        super().__init__(f"line {line}, column {column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


class ElementNotInField(SparsinvError):
    pass


class EmptySet(SparsinvError):
    pass


class DuplicateEntry(SparsinvError):
    pass


class UniformityFailed(SparsinvError):
    pass


class AssertionFailed(SparsinvError):
    """A structure assertion (tagged 'a' through 'f') failed on a group."""

    def __init__(self, tag, message=None):
        super().__init__(message or f"structure assertion ({tag}) failed")
        self.tag = tag


# -- invariant construction ----------------------------------------------

class VariableOverlap(SparsinvError):
    pass


class NotAPGroup(SparsinvError):
    pass


class FlagNotStable(SparsinvError):
    def __init__(self, j, message=None):
        super().__init__(message or f"flag prefix of length {j} is not stable")
        self.j = j


class OrbitProductMismatch(SparsinvError):
    pass


class NotPolynomialWithinBudget(SparsinvError):
    pass


class RescalingRequired(SparsinvError):
    pass


class InvarianceCheckFailed(SparsinvError):
    """A construction produced a polynomial that fails its own invariance check."""


# -- verification ---------------------------------------------------------

class BudgetExceeded(SparsinvError):
    pass
