"""Exception hierarchy shared by all modules.

Every library-specific failure derives from EvalcodesError so callers (and
the CLI) can catch one type; the leaf classes name the exact contract that
was violated.
"""


class EvalcodesError(Exception):
    """Base class for all errors raised by this package."""


# field construction and arithmetic
class NotPrimeError(EvalcodesError):
    pass


class ReducibleModulusError(EvalcodesError):
    pass


class DegreeMismatchError(EvalcodesError):
    pass


class SpecMismatchError(EvalcodesError):
    """Operands belong to different field specs; no implicit coercion."""


# linear codes
class LengthMismatchError(EvalcodesError):
    pass


class RankDeficientError(EvalcodesError):
    pass


class TrivialCodeError(EvalcodesError):
    """The requested code is {0} or the full space."""


class BudgetExceededError(EvalcodesError):
    """An exhaustive search would exceed the enumeration budget."""


class EvenDistanceError(EvalcodesError):
    pass


# Reed-Solomon
class DimensionOutOfRangeError(EvalcodesError):
    pass


# numerical semigroups
class EmptyGeneratorsError(EvalcodesError):
    pass


class InfiniteGapsError(EvalcodesError):
    """gcd of the generators exceeds 1, so the gap set is infinite."""


class NotCoprimeError(EvalcodesError):
    pass


class NotAnElementError(EvalcodesError):
    pass


# curve algebras
class TailTooBigError(EvalcodesError):
    pass


class EvenCharacteristicError(EvalcodesError):
    pass


class EvenDegreeError(EvalcodesError):
    pass


class CurveMismatchError(EvalcodesError):
    pass


# evaluation codes
class NoPointsError(EvalcodesError):
    pass


class IndexOutOfRangeError(EvalcodesError):
    pass


class EmptyPointsError(EvalcodesError):
    pass


class DegreeOutOfRangeError(EvalcodesError):
    pass


class NotInSemigroupError(EvalcodesError):
    pass


# order bound
class HorizonTooSmallError(EvalcodesError):
    """The inspected range is too short to certify the bound's tail."""


# Bezout codes
class BezoutHypothesisViolatedError(EvalcodesError):
    pass


class PointOffCurveError(EvalcodesError):
    pass


# spec files / CLI
class ParseError(EvalcodesError):
    pass


class InconsistentSpecError(EvalcodesError):
    pass
