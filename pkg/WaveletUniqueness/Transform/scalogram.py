"""
尺度网格与小波系数矩阵
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from ..common.errors import ValidationError
from ..Spectral import UniformGrid


@dataclass(frozen=True)
class ScaleGrid:
    """
    尺度网格：几何型 s_j = b^j (j_min ≤ j ≤ j_max) 或显式列表

    几何型只保存 b 与 j 区间；b 以 radix^exponent 给出时按精确指数展开。

    Attributes:
        base: 几何底 b > 1
        j_min: 最小指数
        j_max: 最大指数
        explicit: 显式尺度（升序、正数）
        radix: 指数形式 b = radix^exponent 的底
        exponent: 指数形式的有理指数
    """

    base: Optional[float] = None
    j_min: int = 0
    j_max: int = 0
    explicit: Optional[Tuple[float, ...]] = None
    radix: Optional[float] = None
    exponent: Optional[Fraction] = field(default=None)

    def __post_init__(self):
        if self.explicit is not None:
            values = tuple(float(v) for v in self.explicit)
            if any(not np.isfinite(v) or v <= 0 for v in values):
                raise ValidationError(f"显式尺度必须为正且有限: {values}")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ValidationError("显式尺度必须严格升序")
            object.__setattr__(self, "explicit", values)
            return
        if self.base is None or not self.base > 1:
            raise ValidationError(f"几何底 b 必须大于 1，实际 {self.base}")
        if int(self.j_min) != self.j_min or int(self.j_max) != self.j_max:
            raise ValidationError("j_min / j_max 必须是整数")
        if self.j_min > self.j_max:
            raise ValidationError(f"j_min={self.j_min} 大于 j_max={self.j_max}")

    @classmethod
    def geometric(cls, base: float, j_min: int, j_max: int) -> "ScaleGrid":
        return cls(base=float(base), j_min=int(j_min), j_max=int(j_max))

    @classmethod
    def from_exponent(cls, radix: float, exponent: Fraction, j_min: int, j_max: int) -> "ScaleGrid":
        """b = radix^exponent，b^j 按 radix^(exponent·j) 精确指数计算"""
        exponent = Fraction(exponent)
        return cls(base=float(radix) ** float(exponent), j_min=int(j_min), j_max=int(j_max),
                   radix=float(radix), exponent=exponent)

    @classmethod
    def explicit_scales(cls, scales: Sequence[float]) -> "ScaleGrid":
        return cls(explicit=tuple(scales))

    @property
    def is_geometric(self) -> bool:
        return self.explicit is None

    @property
    def exponents(self) -> np.ndarray:
        return np.arange(self.j_min, self.j_max + 1)

    @property
    def scales(self) -> np.ndarray:
        if self.explicit is not None:
            return np.array(self.explicit, dtype=float)
        if self.exponent is not None:
            return np.array([self.radix ** float(self.exponent * int(j)) for j in self.exponents])
        return np.array([self.base ** int(j) for j in self.exponents])

    def __len__(self) -> int:
        if self.explicit is not None:
            return len(self.explicit)
        return self.j_max - self.j_min + 1

    def log_weights(self) -> np.ndarray:
        """
        ds/s² 的对数均匀求积权重 w_i = ln(b)/s_i，两端梯形修正

        Raises:
            ValidationError: 显式尺度网格
        """
        if not self.is_geometric:
            raise ValidationError("显式尺度网格没有定义求积权重")
        weights = np.log(self.base) / self.scales
        if len(weights) >= 2:
            weights[0] *= 0.5
            weights[-1] *= 0.5
        return weights


@dataclass(frozen=True, eq=False)
class Scalogram:
    """
    小波系数矩阵，行对应尺度，列对应平移 t_k = x_k

    Attributes:
        scales: 尺度网格
        translations: 平移网格（即信号网格）
        coeffs: 复系数矩阵 (n_scales × n_translations)
        underflow: 每行是否因频谱下溢而置零
    """

    scales: ScaleGrid
    translations: UniformGrid
    coeffs: np.ndarray
    underflow: Tuple[bool, ...] = ()

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128).reshape(len(self.scales), self.translations.n)
        if not np.all(np.isfinite(coeffs)):
            raise ValidationError("系数矩阵含有 NaN 或 Inf")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        if not self.underflow:
            object.__setattr__(self, "underflow", tuple(False for _ in range(len(self.scales))))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.coeffs.shape

    def scaled(self, factor: complex) -> "Scalogram":
        return Scalogram(self.scales, self.translations, factor * self.coeffs, self.underflow)
