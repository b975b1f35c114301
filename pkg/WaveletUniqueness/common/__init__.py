"""
公共层：配置、路径、异常与通用工具
"""

from .errors import (
    BandCoverage,
    DegenerateDenominator,
    DegenerateLeadingCoefficient,
    StorageError,
    TauberianFail,
    ValidationError,
    WaveletUniquenessError,
)

__all__ = [
    "WaveletUniquenessError",
    "ValidationError",
    "DegenerateLeadingCoefficient",
    "TauberianFail",
    "DegenerateDenominator",
    "BandCoverage",
    "StorageError",
]
