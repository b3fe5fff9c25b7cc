"""Exception hierarchy shared across the package.

Validation problems (bad measure data, bad schemas) and numerical problems
(quadrature that will not converge, amplitudes that underflow to zero) are
kept on separate branches so callers can map them to distinct exit codes.
"""


class ZenoscaleError(Exception):
    """Base class for every package-specific error."""


class MeasureError(ZenoscaleError):
    """A spectral measure failed validation."""


class EmptyMeasure(MeasureError):
    """No atoms, no components, or an empty support interval."""


class NonNormalized(MeasureError):
    """Total mass differs from 1 beyond the validation tolerance."""


class NegativeDensity(MeasureError):
    """A weight, density value, or width parameter is not positive."""


class InvalidMeasure(MeasureError):
    """Structurally invalid measure data (non-finite values, bad depth, ...)."""


class SchemaError(ZenoscaleError):
    """A measure JSON document failed strict schema checks."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        parts = [message]
        if field is not None:
            parts.append(f"(field: {field})")
        if line is not None:
            parts.append(f"(line {line})")
        super().__init__(" ".join(parts))


class NumericalError(ZenoscaleError):
    """A numerical procedure could not deliver a trustworthy value."""


class QuadratureFailure(NumericalError):
    """Quadrature or truncation error exceeds the accuracy contract."""


class ZeroProbability(NumericalError):
    """|A(t)|^2 is zero to floating-point underflow; log p is -inf."""


class AtomBudgetExceeded(NumericalError):
    """A pure-point convolution would exceed the atom budget."""


class UndefinedZenoTime(ZenoscaleError):
    """The measure has infinite variance, so no Zeno time exists."""


class Incommensurable(ZenoscaleError):
    """Gap ratios admit no rational lattice within the configured bounds."""


class SingleAtomSpectrum(ZenoscaleError):
    """Commensurability analysis needs at least two distinct atoms."""


class ApproximateAlpha(ZenoscaleError):
    """The operation requires an exactly rational scaling exponent."""
