"""
连续傅里叶变换约定 ψ̂(ω) = ∫ ψ(x) e^{-2πiωx} dx 的离散实现

前向变换用矩形求积：F(ω_k) = dx · e^{-2πiω_k x0} · DFT_k(values)，频率居中存放。
"""

from typing import Sequence

import numpy as np
from loguru import logger
from scipy import fft as sp_fft

from ..common.config import SPECTRAL_CONFIG
from ..common.errors import ValidationError
from .signals import SampledSignal, SpectralGrid, SpectralSignal, UniformGrid


def forward_ft(f: SampledSignal) -> SpectralSignal:
    """
    采样信号的连续傅里叶变换近似

    Args:
        f: 采样信号

    Returns:
        居中频率网格上的频谱；实值输入标记为 Hermitian
    """
    grid = f.grid
    if SPECTRAL_CONFIG["power_of_two_warning"] and not grid.is_power_of_two:
        logger.debug(f"采样点数 {grid.n} 不是 2 的幂，使用通用长度 FFT")

    spectral_grid = grid.spectral_grid()
    dft = sp_fft.fftshift(sp_fft.fft(f.values))
    phase = np.exp(-2j * np.pi * spectral_grid.frequencies * grid.x0)
    values = grid.dx * phase * dft
    return SpectralSignal(spectral_grid, values, hermitian=not f.is_complex)


def inverse_ft(F: SpectralSignal, target: UniformGrid) -> SampledSignal:
    """
    forward_ft 在给定网格上的左逆

    Args:
        F: 频谱
        target: 目标时域网格，须满足 dω = 1/(n·dx)

    Returns:
        时域采样；Hermitian 频谱返回实值信号

    Raises:
        ValidationError: 频率网格与目标网格不一致
    """
    if not F.grid.matches(target):
        raise ValidationError(
            f"频率网格 (dω={F.grid.domega}, n={F.grid.n}) 与目标网格 (dx={target.dx}, n={target.n}) 不一致"
        )
    phase = np.exp(2j * np.pi * F.grid.frequencies * target.x0)
    values = sp_fft.ifft(sp_fft.ifftshift(F.values * phase)) / target.dx
    if F.hermitian and F.grid.x0 == target.x0:
        values = values.real
    return SampledSignal(target, values)


def bump_profile(q: np.ndarray, lower: float, upper: float) -> np.ndarray:
    """
    光滑紧支撑轮廓 exp(-1/((q-lower)(upper-q)))，区间外为 0，峰值归一化为 1
    """
    q = np.asarray(q, dtype=float)
    inside = (q > lower) & (q < upper)
    midpoint = 0.5 * (lower + upper)
    qi = np.where(inside, q, midpoint)
    peak_exponent = 4.0 / (upper - lower) ** 2
    return np.where(inside, np.exp(peak_exponent - 1.0 / ((qi - lower) * (upper - qi))), 0.0)


def make_test_function(band: Sequence[float], symmetric: bool, grid: UniformGrid, side: int = 1) -> SampledSignal:
    """
    构造频谱为光滑凸起、支撑远离原点的测试函数

    Args:
        band: 频带 [ω1, ω2]，0 < ω1 < ω2 < Nyquist
        symmetric: 为真时镜像到 [-ω2, -ω1]，输出实值
        grid: 目标时域网格
        side: 非对称时凸起所在的一侧（+1 或 -1）

    Returns:
        测试函数 g

    Raises:
        ValidationError: 频带触及 0、超出 Nyquist，或比频率分辨率还窄
    """
    if len(band) != 2:
        raise ValidationError(f"频带必须是两个端点，实际 {band}")
    low, high = float(band[0]), float(band[1])
    if not 0.0 < low < high:
        raise ValidationError(f"频带须满足 0 < ω1 < ω2，实际 [{low}, {high}]")
    if high >= grid.nyquist:
        raise ValidationError(f"频带上端 {high} 超出 Nyquist 频率 {grid.nyquist}")
    if side not in (1, -1):
        raise ValidationError(f"side 只能取 +1 或 -1，实际 {side}")

    spectral_grid = grid.spectral_grid()
    freqs = spectral_grid.frequencies
    if symmetric:
        values = bump_profile(np.abs(freqs), low, high)
    else:
        values = bump_profile(side * freqs, low, high)
    if not np.any(values > 0):
        raise ValidationError(f"频带 [{low}, {high}] 内没有频点，网格分辨率 dω={spectral_grid.domega}")

    spectrum = SpectralSignal(spectral_grid, values.astype(np.complex128), hermitian=symmetric)
    return inverse_ft(spectrum, grid)
