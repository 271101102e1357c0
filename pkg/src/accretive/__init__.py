"""Functional calculus and inequality checks for accretive (sectorial) matrices."""

from accretive.errors import (
    AccretiveError,
    ContourHitsCut,
    DefectiveMatrix,
    DimensionMismatch,
    GenerationFailure,
    NearSingular,
    NotAccretive,
    NotPSD,
    QuadratureNotConverged,
    SpectrumOnCut,
)
from accretive.matcore import (
    LoewnerVerdict,
    im_part,
    loewner_leq,
    op_norm,
    re_part,
    spectral_radius,
)
from accretive.sector import SectorMatrix, random_sector, sector_angle

__version__ = "0.1.0"

__all__ = [
    "AccretiveError",
    "ContourHitsCut",
    "DefectiveMatrix",
    "DimensionMismatch",
    "GenerationFailure",
    "LoewnerVerdict",
    "NearSingular",
    "NotAccretive",
    "NotPSD",
    "QuadratureNotConverged",
    "SectorMatrix",
    "SpectrumOnCut",
    "im_part",
    "loewner_leq",
    "op_norm",
    "random_sector",
    "re_part",
    "sector_angle",
    "spectral_radius",
]
