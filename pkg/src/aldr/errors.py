"""Exception types raised across the package."""


class AldrError(Exception):
    """Base class for every error raised by :mod:`aldr`."""


class WeightsError(AldrError, ValueError):
    """Invalid weight list (parse failure, empty list, non-positive entry)."""


class EmptyWeightsError(WeightsError):
    pass


class NonPositiveWeightError(WeightsError):
    pass


class OverflowRegimeError(AldrError, ValueError):
    """Weight sum or tree depth outside the fixed-width arithmetic regime."""


class InvalidRuleError(AldrError, ValueError):
    """Amplification rule is malformed or maps k to some K < k."""


class DomainError(AldrError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class OrderTooLargeError(AldrError, ArithmeticError):
    """Multiplicative order search exceeded its iteration cap."""


class UndecidedError(AldrError, ArithmeticError):
    """Interval refinement reached the precision cap without a verdict."""


class BudgetExhaustedError(AldrError, RuntimeError):
    """A sampler call consumed its per-call flip budget."""


class EnumerationCapError(AldrError, ValueError):
    """A brute-force enumeration would exceed its growth guard."""


class UndersampledError(AldrError, ValueError):
    """Histogram too small for the chi-square approximation."""


class SourceExhaustedError(AldrError, RuntimeError):
    """A finite scripted bit source ran out of bits."""


class InvalidMethodError(AldrError, ValueError):
    """Unknown sampling method name."""
