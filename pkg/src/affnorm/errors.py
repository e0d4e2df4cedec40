"""Exception types shared across the library.

Failures that are *expected outcomes* of an algorithm (a rational
reconstruction that does not exist, a prime that must be rejected) are
reported as return values, not exceptions.  The classes here cover genuine
contract violations and explicitly unsupported inputs.
"""


class AffnormError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(AffnormError):
    """Operands belong to different ring contexts."""


class ShapeError(AffnormError):
    """Input has the wrong shape (e.g. multivariate where univariate is required)."""


class CoprimalityError(AffnormError):
    """Chinese remaindering was asked to combine non-coprime moduli."""


class PrimeRangeExhausted(AffnormError):
    """A prime sampling range does not contain enough unused primes."""


class UnsupportedDimensionError(AffnormError):
    """Radical / decomposition requested outside the zero-dimensional
    (or principal) case.  Surfaces with positive-dimensional singular locus
    land here by design."""


class ZerodivisorError(AffnormError):
    """A zerodivisor was detected where the input was assumed to be a domain
    (or at least to admit the chosen non-zerodivisor)."""


class DegenerateInputError(AffnormError):
    """Degenerate argument (zero ideal where a nonzero one is required, etc.)."""


class IterationLimitError(AffnormError):
    """A loop guarded by an iteration cap exceeded the cap."""


class InputSyntaxError(AffnormError):
    """Parse error in a polynomial expression or an input file.

    Carries ``line`` and ``column`` (1-based) when available.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
