"""
WaveletUniqueness：连续小波变换的唯一性工具包

组件：
- Spectral: 均匀网格、采样信号与连续傅里叶变换约定
- Wavelets: 小波动物园与伸缩平移
- Transform: 尺度网格上的 CWT、直接求积与 Plancherel 能量
- Admissibility: Tauberian 检查、Calderón 常数与唯一性证书
- DualFrame: 覆盖区间、对偶小波与重构公式
- Moments: 小波矩、多项式配对与矩恢复
- Cli: 文件读写与命令行
"""

from importlib import import_module
from typing import Dict

__version__ = "1.0.0"

COMPONENTS = ("Spectral", "Wavelets", "Transform", "Admissibility", "DualFrame", "Moments", "Cli")


def component_status() -> Dict[str, bool]:
    """
    逐个导入组件并询问其 is_available()

    Returns:
        组件名 → 是否可用
    """
    status = {}
    for name in COMPONENTS:
        try:
            status[name] = bool(import_module(f".{name}", __name__).is_available())
        except ImportError:
            status[name] = False
    return status
