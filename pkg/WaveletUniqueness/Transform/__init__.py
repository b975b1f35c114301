"""
Transform 包：尺度网格上的连续小波变换、直接求积参考值与 Plancherel 能量。

模块结构：
- scalogram: ScaleGrid / Scalogram
- cwt: cwt / cwt_single / interchange / plancherel_energy / signal_energy
"""

__version__ = "1.0.0"

from .cwt import cwt, cwt_single, interchange, plancherel_energy, signal_energy
from .scalogram import ScaleGrid, Scalogram

__all__ = [
    "ScaleGrid",
    "Scalogram",
    "cwt",
    "cwt_single",
    "interchange",
    "plancherel_energy",
    "signal_energy",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Transform组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
