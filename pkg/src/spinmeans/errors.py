"""Exception hierarchy.

Every domain error carries a stable ``code`` string; the CLI reports it
verbatim in its JSON error object.
"""


class SpinMeansError(ValueError):
    code = "SpinMeansError"


class InvalidValue(SpinMeansError):
    """Non-finite number (NaN/Inf) or malformed input at a public boundary."""

    code = "InvalidValue"


class ConstraintViolation(SpinMeansError):
    """Mean or probability triple outside the Bloch ball."""

    code = "ConstraintViolation"


class InvalidDensity(SpinMeansError):
    code = "InvalidDensity"


class ZeroSpinor(SpinMeansError):
    code = "ZeroSpinor"


class NotPure(SpinMeansError):
    code = "NotPure"


class NotNormalized(SpinMeansError):
    code = "NotNormalized"


class NonzeroC1Phase(SpinMeansError):
    code = "NonzeroC1Phase"


class PoleError(SpinMeansError):
    """Input state too close to the south pole of the parametrization."""

    code = "PoleError"


class DegenerateSuperposition(SpinMeansError):
    """The superposed vector vanishes (complete destructive interference)."""

    code = "DegenerateSuperposition"


class CrossCheckMismatch(SpinMeansError):
    code = "CrossCheckMismatch"


class ZeroVector(SpinMeansError):
    code = "ZeroVector"


class MissingAxis(SpinMeansError):
    code = "MissingAxis"
