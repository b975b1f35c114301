"""
Moments 包：小波矩、消失矩阶数、多项式配对与矩恢复。

模块结构：
- moments: PolynomialSignal / MomentVector / moment / moment_vector /
  vanishing_moment_order / polynomial_pairing / moment_recovery
"""

__version__ = "1.0.0"

from .moments import (
    MomentVector,
    PolynomialSignal,
    moment,
    moment_recovery,
    moment_vector,
    polynomial_pairing,
    vanishing_moment_order,
)

__all__ = [
    "PolynomialSignal",
    "MomentVector",
    "moment",
    "moment_vector",
    "vanishing_moment_order",
    "polynomial_pairing",
    "moment_recovery",
    "__version__",
    "is_available",
]


def is_available() -> bool:
    """
    检查Moments组件是否可用

    Returns:
        bool: 组件是否可用
    """
    return True
