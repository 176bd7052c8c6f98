"""Exception types raised across the package."""


class CircSortError(Exception):
    """Base class for all package errors."""


class NotABijection(CircSortError, ValueError):
    pass


class EmptyInput(CircSortError, ValueError):
    pass


class ModulusMismatch(CircSortError, ValueError):
    pass


class NotCoprime(CircSortError, ValueError):
    pass


class NotPrime(CircSortError, ValueError):
    pass


class PreconditionViolated(CircSortError, ValueError):
    pass


class DivisibilityViolated(CircSortError, ValueError):
    pass


class NotAPermutationPolynomial(CircSortError, ValueError):
    pass


class SolverFailed(CircSortError, RuntimeError):
    """A construction failed its own verification (an implementation bug)."""


class BudgetExceeded(CircSortError, RuntimeError):
    """A search hit its node or size limit before resolving the question."""


class ParseError(CircSortError, ValueError):
    pass


class InvalidWitness(CircSortError, ValueError):
    pass
