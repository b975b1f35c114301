"""
重构公式 Σ_j φ_{b^j} * μ_{b^j} * g = g（φ = conj(ψ)，L¹ 归一伸缩 φ_s(x) = φ(x/s)/s）
以及配对恒等式 ∫ f·g = Σ_j b^{−j/2} ∫ W_ψ f(b^j, t)·(μ_{b^j} * g)(t) dt
"""

from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Dict, Optional, Tuple

import numpy as np
from loguru import logger
from scipy.signal import fftconvolve

from ..common.config import DUAL_FRAME_CONFIG
from ..common.errors import BandCoverage, ValidationError
from ..Spectral import SampledSignal, SpectralSignal, UniformGrid, forward_ft, inverse_ft
from ..Transform import ScaleGrid, cwt
from ..Wavelets import WaveletSpec, conjugate, eval_spectrum
from .dual import DualWavelet, JRange, auto_j_range, frame_multiplier


class ReconstructionMode(str, Enum):
    SPECTRAL = "spectral"
    TEMPORAL = "temporal"


def _significant(G: SpectralSignal) -> np.ndarray:
    magnitude = np.abs(G.values)
    return magnitude > DUAL_FRAME_CONFIG["significance_rtol"] * np.max(magnitude, initial=0.0)


def signal_band(G: SpectralSignal) -> Optional[Tuple[float, float]]:
    """
    显著频点的 |ω| 范围；没有显著频点时返回 None

    Raises:
        BandCoverage: ω = 0 处有显著能量
    """
    significant = _significant(G)
    if not significant.any():
        return None
    freqs = G.frequencies[significant]
    if np.any(freqs == 0):
        raise BandCoverage("信号在 ω = 0 处有显著能量，重构公式无法还原零频", details={"frequencies": [0.0]})
    magnitudes = np.abs(freqs)
    return float(magnitudes.min()), float(magnitudes.max())


def _uncovered(G: SpectralSignal, multiplier: np.ndarray) -> np.ndarray:
    return _significant(G) & (np.abs(multiplier - 1.0) > DUAL_FRAME_CONFIG["coverage_tolerance"])


def _check_coverage(G: SpectralSignal, multiplier: np.ndarray, j_range: JRange) -> None:
    bad = _uncovered(G, multiplier)
    if bad.any():
        uncovered = G.frequencies[bad]
        raise BandCoverage(
            f"j 区间 {j_range} 未覆盖信号频带，{len(uncovered)} 个显著频点偏离，例如 ω={uncovered[:5].tolist()}",
            details={"frequencies": uncovered.tolist(), "j_range": list(j_range)},
        )


def _resolve_j_range(G: SpectralSignal, mu: DualWavelet, j_range: Optional[JRange]) -> Optional[JRange]:
    if j_range is not None:
        if int(j_range[0]) > int(j_range[1]):
            raise ValidationError(f"j_min 大于 j_max: {j_range}")
        return int(j_range[0]), int(j_range[1])
    band = signal_band(G)
    return None if band is None else auto_j_range(mu, band)


def _centered_grid(grid: UniformGrid) -> UniformGrid:
    """与 grid 同步长、同点数、以 0 为第 n//2 个点的卷积核网格"""
    return UniformGrid(-(grid.n // 2) * grid.dx, grid.dx, grid.n)


def _truncate(kernel: np.ndarray) -> np.ndarray:
    peak = np.max(np.abs(kernel), initial=0.0)
    return np.where(np.abs(kernel) < DUAL_FRAME_CONFIG["temporal_truncation"] * peak, 0.0, kernel)


def _convolve_same(values: np.ndarray, kernel: np.ndarray, dx: float) -> np.ndarray:
    n = len(values)
    return fftconvolve(values, kernel)[n // 2:n // 2 + n] * dx


def _temporal_terms(g: SampledSignal, phi: WaveletSpec, mu: DualWavelet, j_range: JRange) -> np.ndarray:
    kernel_grid = _centered_grid(g.grid)
    x = kernel_grid.points
    freqs = kernel_grid.spectral_grid().frequencies
    total = np.zeros(g.grid.n, dtype=np.complex128)
    for j in range(j_range[0], j_range[1] + 1):
        s = mu.base_b ** j
        phi_kernel = _truncate(np.asarray(phi(x / s), dtype=np.complex128) / s)
        mu_spectrum = SpectralSignal(kernel_grid.spectral_grid(), mu.spectrum_eval(s * freqs))
        mu_kernel = _truncate(np.asarray(inverse_ft(mu_spectrum, kernel_grid).values, dtype=np.complex128))
        h = _convolve_same(g.values.astype(np.complex128), mu_kernel, g.grid.dx)
        total = total + _convolve_same(h, phi_kernel, g.grid.dx)
    return total


def reconstruct(g: SampledSignal, psi: WaveletSpec, mu: DualWavelet, j_range: Optional[JRange] = None,
                mode: ReconstructionMode = ReconstructionMode.SPECTRAL) -> SampledSignal:
    """
    用 φ = conj(ψ) 与对偶 μ 重构 g

    Args:
        g: 频谱远离 0 的信号
        psi: 分析小波（φ = conj(ψ) 为卷积核）
        mu: 与 φ 配对的对偶小波
        j_range: [j_min, j_max]，缺省时按信号显著频带自动选取
        mode: spectral（频域乘子）或 temporal（显式离散卷积）

    Raises:
        BandCoverage: j 区间未覆盖信号频带，或信号在 0 频处有能量
    """
    mode = ReconstructionMode(mode)
    G = forward_ft(g)
    j_range = _resolve_j_range(G, mu, j_range)
    if j_range is None:
        return SampledSignal(g.grid, np.zeros(g.grid.n, dtype=g.values.dtype))

    phi = conjugate(psi)
    multiplier = frame_multiplier(mu, G.frequencies, j_range, partial(eval_spectrum, phi))
    _check_coverage(G, multiplier, j_range)

    if mode is ReconstructionMode.SPECTRAL:
        values = np.asarray(inverse_ft(SpectralSignal(G.grid, G.values * multiplier), g.grid).values)
    else:
        values = _temporal_terms(g, phi, mu, j_range)

    if not g.is_complex and phi.is_real:
        values = values.real
    logger.info(f"重构完成: {mode.value}, j ∈ [{j_range[0]}, {j_range[1]}]")
    return SampledSignal(g.grid, values)


@dataclass(frozen=True)
class PairingResult:
    """
    Attributes:
        pairing: Σ_j b^{−j/2} Σ_k W_j[k]·h_j[k]·dt
        direct: Σ f·g·dx
        bound: Σ_j ‖h_j‖₁ b^{−j/2}，满足 |pairing| ≤ max|W|·bound
        max_coefficient: 所用尺度上 max|W_ψ f|
        covered: g 的频带是否被 j 区间覆盖（覆盖时 pairing = direct）
        j_range: 使用的 j 区间
    """

    pairing: complex
    direct: complex
    bound: float
    max_coefficient: float
    covered: bool
    j_range: JRange

    def to_dict(self) -> Dict[str, object]:
        return {
            "pairing": self.pairing,
            "direct": self.direct,
            "bound": self.bound,
            "max_coefficient": self.max_coefficient,
            "covered": self.covered,
            "j_range": list(self.j_range),
        }


def reproducing_pairing(f: SampledSignal, g: SampledSignal, psi: WaveletSpec, mu: DualWavelet,
                        j_range: Optional[JRange] = None) -> PairingResult:
    """
    由 CWT 行计算 ∫ f·g 的离散重构配对，并给出估计界

    当 f 的 CWT 在所有 (b^j, t) 上为零时，配对为零；g 被覆盖时配对等于直接积分。

    Raises:
        ValidationError: f 与 g 不在同一网格上
    """
    if f.grid != g.grid:
        raise ValidationError("f 与 g 必须在同一网格上")
    G = forward_ft(g)
    j_range = _resolve_j_range(G, mu, j_range)
    direct = complex(np.sum(f.values * g.values) * g.grid.dx)
    if j_range is None:
        return PairingResult(0j, direct, 0.0, 0.0, True, (0, -1))

    multiplier = frame_multiplier(mu, G.frequencies, j_range, partial(eval_spectrum, conjugate(psi)))
    covered = not np.any(_uncovered(G, multiplier))
    if not covered:
        logger.warning(f"j 区间 {j_range} 未覆盖 g 的频带，配对不等于直接积分")

    W = cwt(f, psi, ScaleGrid.geometric(mu.base_b, *j_range))
    pairing, bound = 0j, 0.0
    for i, j in enumerate(range(j_range[0], j_range[1] + 1)):
        s = mu.base_b ** j
        h = np.asarray(inverse_ft(SpectralSignal(G.grid, G.values * mu.spectrum_eval(s * G.frequencies)),
                                  g.grid).values)
        weight = s ** -0.5
        pairing += weight * complex(np.sum(W.coeffs[i] * h) * g.grid.dx)
        bound += weight * float(np.sum(np.abs(h)) * g.grid.dx)

    result = PairingResult(pairing, direct, bound, float(np.max(np.abs(W.coeffs))), covered, j_range)
    logger.info(f"配对恒等式: pairing={pairing:.6e}, direct={direct:.6e}, bound={bound:.3e}")
    return result
