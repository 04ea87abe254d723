"""Exception types shared across the package."""


class ExqmfError(Exception):
    """Base class for all package errors."""


# numeric core
class NonInvertibleDenominator(ExqmfError):
    """A rational whose denominator is not a unit modulo p^s."""


NonIntegrality = NonInvertibleDenominator


class NotSmooth(ExqmfError):
    """Integer has a prime factor above the requested bound."""


# series engine
class DomainMismatch(ExqmfError):
    pass


class NonUnitConstantTerm(ExqmfError):
    pass


class NonzeroConstantInner(ExqmfError):
    pass


class NotReversible(ExqmfError):
    pass


class ConstantTermNotOne(ExqmfError):
    pass


BadConstantTerm = ConstantTermNotOne


class DegreeExceeded(ExqmfError):
    pass


class Inconsistent(ExqmfError):
    """Linear system has no solution."""


class Underdetermined(ExqmfError):
    """Linear system has a positive-dimensional solution space.

    ``particular`` is one solution and ``kernel`` a basis of the
    homogeneous solutions.
    """

    def __init__(self, msg, particular=None, kernel=None):
        super().__init__(msg)
        self.particular = particular
        self.kernel = kernel or []


# hypergeometric
class BadLowerParameter(ExqmfError):
    pass


# extremal forms
class WeightFour(ExqmfError):
    pass


class OddWeight(ExqmfError):
    pass


class EmptySpace(ExqmfError):
    pass


class NonUnique(ExqmfError):
    pass


class SingularSystem(ExqmfError):
    pass


class ExtractionFailed(ExqmfError):
    pass


class NonIntegralExponent(ExqmfError):
    pass


# congruences
class CheckFailed(ExqmfError):
    """A congruence failed; ``index`` is the first offending coefficient."""

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class DerivationMismatch(ExqmfError):
    pass


class ProofStepFailed(ExqmfError):
    pass
