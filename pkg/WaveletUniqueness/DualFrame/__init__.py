"""
DualFrame 包：覆盖区间、环形凸起、对偶小波、单位分解检查与重构公式。

模块结构：
- cover: SideCover / CoverResult / AnnularBump / find_cover / make_bump
- dual: DualWavelet / build_dual / partition_check / auto_j_range / build_dual_for
- reconstruct: reconstruct / reproducing_pairing
"""

__version__ = "1.0.0"

from .cover import AnnularBump, CoverResult, SideCover, find_cover, make_bump
from .dual import DualWavelet, auto_j_range, build_dual, build_dual_for, frame_multiplier, partition_check
from .reconstruct import PairingResult, ReconstructionMode, reconstruct, reproducing_pairing, signal_band

__all__ = [
    "SideCover",
    "CoverResult",
    "AnnularBump",
    "DualWavelet",
    "PairingResult",
    "ReconstructionMode",
    "find_cover",
    "make_bump",
    "build_dual",
    "build_dual_for",
    "partition_check",
    "frame_multiplier",
    "auto_j_range",
    "reconstruct",
    "reproducing_pairing",
    "signal_band",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查DualFrame组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
