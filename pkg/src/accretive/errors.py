"""Exception hierarchy.

Every numerical kernel failure derives from :class:`AccretiveError` so the CLI
can map it to a single exit code.
"""


class AccretiveError(Exception):
    """Base class for numerical kernel failures."""


class DimensionMismatch(AccretiveError, ValueError):
    pass


class NotAccretive(AccretiveError):
    """The real part is not positive definite."""


class NotPSD(AccretiveError):
    pass


class NearSingular(AccretiveError):
    pass


class DefectiveMatrix(AccretiveError):
    """Eigenvector matrix too ill-conditioned for diagonalization.

    Callers should switch to contour quadrature.
    """

    def __init__(self, message, vec_condition=None):
        super().__init__(message)
        self.vec_condition = vec_condition


class SpectrumOnCut(AccretiveError):
    """An eigenvalue lies on (or too close to) the branch cut (-inf, 0]."""


class ContourHitsCut(AccretiveError):
    pass


class QuadratureNotConverged(AccretiveError):
    pass


class GenerationFailure(AccretiveError):
    """Constrained random generation exhausted its attempts."""
