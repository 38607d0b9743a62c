"""Exception and warning classes raised across the package."""


class AlphaVacError(Exception):
    """Base class for every error raised by ``alphavac``."""


class InvalidMode(AlphaVacError, ValueError):
    """Physical mode parameters outside their admissible range."""


class InvalidParameter(AlphaVacError, ValueError):
    pass


class BasisMismatch(AlphaVacError, ValueError):
    """A density matrix was passed in the wrong basis for the operation."""


class InvalidSpectrum(AlphaVacError, ValueError):
    pass


class NumericalError(AlphaVacError, ArithmeticError):
    """Eigensolver failure or a PSD-expected matrix with a clearly negative eigenvalue."""


class DegenerateMeasurement(AlphaVacError, ArithmeticError):
    pass


class MinimizerFailure(AlphaVacError, RuntimeError):
    pass


class ConfigError(AlphaVacError, ValueError):
    pass


class TruncationWarning(UserWarning):
    """The Fock cutoff hit its cap before the tail mass met the tolerance."""
