"""
Admissibility 包：两侧的 Tauberian 检查、Calderón 常数、方向能量与唯一性证书。

模块结构：
- checks: Side / tauberian_check / calderon_constant / directional_energy /
  uniqueness_certificate / admissibility_report
"""

__version__ = "1.0.0"

from .checks import (
    DIVERGENT,
    AdmissibilityReport,
    Side,
    SideCertificate,
    SideReport,
    TauberianResult,
    UniquenessCertificate,
    admissibility_report,
    as_side,
    calderon_constant,
    default_threshold,
    directional_energy,
    scan_cells,
    spectrum_sup,
    tauberian_check,
    uniqueness_certificate,
)

__all__ = [
    "DIVERGENT",
    "Side",
    "TauberianResult",
    "SideCertificate",
    "UniquenessCertificate",
    "SideReport",
    "AdmissibilityReport",
    "tauberian_check",
    "calderon_constant",
    "directional_energy",
    "uniqueness_certificate",
    "admissibility_report",
    "as_side",
    "scan_cells",
    "spectrum_sup",
    "default_threshold",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Admissibility组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
