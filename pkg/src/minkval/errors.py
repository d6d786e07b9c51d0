"""Exception types shared across the package."""


class MinkvalError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(MinkvalError):
    pass


class ZeroVectorError(MinkvalError):
    pass


class NegativeScaleError(MinkvalError):
    pass


class DegenerateBodyError(MinkvalError):
    """Operation requires a full-dimensional body."""


class MissesInteriorError(MinkvalError):
    """Slicing hyperplane does not cut the interior."""


class DependentGeneratorsError(MinkvalError):
    pass


class RetriesExhaustedError(MinkvalError):
    """Random generation could not satisfy its postconditions."""


class ExactModeError(MinkvalError):
    """Operator tree needs the approximate layer but exact mode was requested."""


class DegreeExceededError(MinkvalError):
    """Held-out interpolation node has nonzero residual: the scaling
    behaviour is not a polynomial of the assumed degree."""


class InconsistentDimensionError(MinkvalError):
    """Point images disagree in dimension, signalling a non
    translation-invariant operator."""


class UnknownOperatorError(MinkvalError):
    pass


class FormatError(MinkvalError):
    """Malformed input file or rational literal."""
