"""
Wavelets 包：小波动物园、伸缩平移与频谱求值。

模块结构：
- zoo: WaveletSpec / DilatedWavelet / make_wavelet / dilate_translate / eval_spectrum 及注册表
"""

__version__ = "1.0.0"

from .zoo import (
    WAVELET_REGISTRY,
    DilatedWavelet,
    WaveletKind,
    WaveletSpec,
    as_wavelet,
    conjugate,
    dilate_translate,
    eval_spectrum,
    fine_sampling,
    l1_dilate,
    list_wavelets,
    make_wavelet,
    spectrum_family,
)

__all__ = [
    "WaveletKind",
    "WaveletSpec",
    "DilatedWavelet",
    "make_wavelet",
    "dilate_translate",
    "eval_spectrum",
    "conjugate",
    "l1_dilate",
    "as_wavelet",
    "fine_sampling",
    "spectrum_family",
    "list_wavelets",
    "WAVELET_REGISTRY",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Wavelets组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
