"""
Spectral 包：均匀采样网格与连续傅里叶变换约定的离散实现。

模块结构：
- signals: UniformGrid / SampledSignal / SpectralGrid / SpectralSignal
- fourier: forward_ft / inverse_ft / make_test_function
"""

__version__ = "1.0.0"

from .fourier import bump_profile, forward_ft, inverse_ft, make_test_function
from .signals import SampledSignal, SpectralGrid, SpectralSignal, UniformGrid

__all__ = [
    "UniformGrid",
    "SampledSignal",
    "SpectralGrid",
    "SpectralSignal",
    "forward_ft",
    "inverse_ft",
    "make_test_function",
    "bump_profile",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Spectral组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
