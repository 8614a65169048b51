"""Exception hierarchy shared by all modules."""


class DiophkitError(Exception):
    """Base class for every error raised by the toolkit."""


class NotCoprime(DiophkitError, ValueError):
    pass


class NotCoprimeModuli(DiophkitError, ValueError):
    pass


class NotPrime(DiophkitError, ValueError):
    pass


class ZeroPolynomial(DiophkitError, ValueError):
    pass


class FactorizationTooHard(DiophkitError):
    pass


class NotIrreducible(DiophkitError, ValueError):
    pass


class DegreeCapExceeded(DiophkitError):
    pass


class PrecisionExhausted(DiophkitError):
    pass


class Unsupported(DiophkitError):
    pass


class HypothesisViolated(DiophkitError, ValueError):
    pass


class RamifiedPrime(DiophkitError, ValueError):
    pass


class SearchLimitExceeded(DiophkitError):
    pass


class BadDivisibility(DiophkitError, ValueError):
    pass


class UnsupportedBasis(DiophkitError, ValueError):
    pass


class ExplosionGuard(DiophkitError):
    """A brute-force search would exceed its configured budget."""


class EmptySignature(DiophkitError, ValueError):
    pass


class PreconditionFailed(DiophkitError):
    pass


class HypothesesNotMet(DiophkitError):
    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


class BadLeadingCoefficient(DiophkitError, ValueError):
    pass


class TooManyShifts(DiophkitError, ValueError):
    pass


class NotFound(DiophkitError):
    pass


class RationalAngle(DiophkitError, ValueError):
    """The supplied unit is a root of unity, so no useful power exists."""


class NotIrreducibleAtResidue(DiophkitError, ValueError):
    pass


class BadPrime(DiophkitError, ValueError):
    pass


class ReducibleRadical(DiophkitError, ValueError):
    pass


class InconsistentChain(DiophkitError, ValueError):
    pass


class IncompleteParams(DiophkitError, ValueError):
    pass


class UnknownSuite(DiophkitError, KeyError):
    pass
