"""Exception types shared across the package."""


class UsageError(ValueError):
    """Operands or arguments that violate an operation's preconditions."""


class ParameterError(ValueError):
    """Invalid model parameters (ambient dimension, number of strings)."""


class NonInvertibleError(ArithmeticError):
    """Series whose constant term is not a unit in the integers."""


class OracleScaleError(ValueError):
    """Brute-force oracle asked for an instance beyond its enumeration cap."""


class InconsistencyError(RuntimeError):
    """An internal identity that must always hold was found violated."""


class SlopeError(ValueError):
    """Slope undefined or slope hypothesis not satisfied."""


class RangeError(ValueError):
    """Degree outside the meaningful range of a truncated series."""


class UndefinedRatioError(ZeroDivisionError):
    """Zero coefficient inside a ratio window."""
