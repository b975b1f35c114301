"""
采样网格与信号类型
时域均匀网格、采样信号，以及频域的居中频率网格与频谱
"""

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from ..common.config import SPECTRAL_CONFIG
from ..common.errors import ValidationError

ArrayLike = Union[np.ndarray, list, tuple]


def _frozen_array(values: ArrayLike, name: str) -> np.ndarray:
    array = np.array(values)
    if array.ndim != 1:
        raise ValidationError(f"{name} 必须是一维数组，实际维度 {array.ndim}")
    if not np.issubdtype(array.dtype, np.number):
        raise ValidationError(f"{name} 必须是数值数组")
    if np.iscomplexobj(array):
        array = array.astype(np.complex128)
    else:
        array = array.astype(np.float64)
    if not np.all(np.isfinite(array)):
        raise ValidationError(f"{name} 含有 NaN 或 Inf")
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class UniformGrid:
    """
    均匀时域网格 x_k = x0 + k·dx, k = 0..n-1

    Attributes:
        x0: 左端点
        dx: 采样间隔
        n: 采样点数（推荐 2 的幂）
    """

    x0: float
    dx: float
    n: int

    def __post_init__(self):
        if not np.isfinite(self.x0) or not np.isfinite(self.dx):
            raise ValidationError("网格参数必须有限")
        if self.dx <= 0:
            raise ValidationError(f"dx 必须为正，实际 {self.dx}")
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError(f"n 必须是不小于 2 的整数，实际 {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def centered(cls, half_width: float, n: int) -> "UniformGrid":
        """以原点为中心、覆盖 [-half_width, half_width) 的网格"""
        return cls(x0=-half_width, dx=2.0 * half_width / n, n=n)

    @property
    def points(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n)

    @property
    def length(self) -> float:
        return self.n * self.dx

    @property
    def nyquist(self) -> float:
        return 1.0 / (2.0 * self.dx)

    @property
    def is_power_of_two(self) -> bool:
        return self.n & (self.n - 1) == 0

    def spectral_grid(self) -> "SpectralGrid":
        """由该时域网格导出的频率网格（dω = 1/(n·dx)）"""
        return SpectralGrid(domega=1.0 / (self.n * self.dx), n=self.n, x0=self.x0)


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """
    均匀网格上的采样函数（实值或复值）

    Attributes:
        grid: 采样网格
        values: 长度为 grid.n 的采样值，只读
    """

    grid: UniformGrid
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_array(self.values, "values")
        if values.shape[0] != self.grid.n:
            raise ValidationError(f"values 长度 {values.shape[0]} 与网格点数 {self.grid.n} 不一致")
        object.__setattr__(self, "values", values)

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.values)

    @property
    def points(self) -> np.ndarray:
        return self.grid.points

    def scaled(self, factor: complex) -> "SampledSignal":
        return SampledSignal(self.grid, factor * self.values)

    def norm(self) -> float:
        """离散 L² 范数 (Σ|f|²·dx)^{1/2}"""
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.dx))

    def evaluate(self, x: ArrayLike) -> np.ndarray:
        """网格外取零的线性插值"""
        x = np.asarray(x, dtype=float)
        return np.interp(x, self.grid.points, self.values, left=0.0, right=0.0)


@dataclass(frozen=True)
class SpectralGrid:
    """
    居中的频率网格 ω_k = k·dω, k ∈ [-n/2, n/2)

    Attributes:
        domega: 频率间隔
        n: 频点数
        x0: 导出该网格的时域网格左端点（用于相位校正）
    """

    domega: float
    n: int
    x0: float = 0.0

    def __post_init__(self):
        if not self.domega > 0:
            raise ValidationError(f"dω 必须为正，实际 {self.domega}")
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError(f"n 必须是不小于 2 的整数，实际 {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-(self.n // 2), self.n - self.n // 2) * self.domega

    @property
    def dx(self) -> float:
        return 1.0 / (self.n * self.domega)

    def matches(self, grid: UniformGrid, rtol: float = 1e-12) -> bool:
        """检查 dω = 1/(n·dx) 是否对给定时域网格成立"""
        if grid.n != self.n:
            return False
        expected = 1.0 / (grid.n * grid.dx)
        return abs(self.domega - expected) <= rtol * expected


@dataclass(frozen=True, eq=False)
class SpectralSignal:
    """
    频率网格上的连续傅里叶变换采样

    Attributes:
        grid: 频率网格
        values: 复数频谱值
        hermitian: 是否标记为共轭对称（对应实值时域信号）
    """

    grid: SpectralGrid
    values: np.ndarray
    hermitian: bool = field(default=False)

    def __post_init__(self):
        values = _frozen_array(self.values, "values").astype(np.complex128)
        values.setflags(write=False)
        if values.shape[0] != self.grid.n:
            raise ValidationError(f"频谱长度 {values.shape[0]} 与频率网格点数 {self.grid.n} 不一致")
        object.__setattr__(self, "values", values)
        if self.hermitian and not self.is_real():
            raise ValidationError("标记为 Hermitian 的频谱不满足共轭对称")

    @property
    def frequencies(self) -> np.ndarray:
        return self.grid.frequencies

    def _dephased(self) -> np.ndarray:
        # 去掉 e^{-2πiωx0} 相位后按 DFT 顺序排列
        phase = np.exp(2j * np.pi * self.grid.frequencies * self.grid.x0)
        return np.fft.ifftshift(self.values * phase)

    def is_real(self, rtol: float = None) -> bool:
        """频谱是否对应实值信号：X[-k] = conj(X[k])"""
        rtol = SPECTRAL_CONFIG["hermitian_rtol"] if rtol is None else rtol
        unshifted = self._dephased()
        scale = np.max(np.abs(unshifted))
        if scale == 0.0:
            return True
        mirrored = np.conj(unshifted[(-np.arange(self.grid.n)) % self.grid.n])
        return bool(np.max(np.abs(unshifted - mirrored)) <= rtol * scale)

    def sample(self, omega: ArrayLike) -> np.ndarray:
        """网格外取零的线性插值查表"""
        omega = np.asarray(omega, dtype=float)
        freqs = self.grid.frequencies
        real = np.interp(omega, freqs, self.values.real, left=0.0, right=0.0)
        imag = np.interp(omega, freqs, self.values.imag, left=0.0, right=0.0)
        return real + 1j * imag
