"""
连续小波变换 W_ψ f(s,t) = ⟨f, ψ_{s,t}⟩

- cwt: 逐尺度频域计算，row(s) = inverse_ft(f̂(ω)·conj(ψ̂(sω))·s^{1/2})
- cwt_single: 直接求积参考值
- interchange: 信号与小波互换后的配对 ⟨f_{1/s,−t/s}, ψ⟩
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from scipy import integrate

from ..common.config import TRANSFORM_CONFIG
from ..common.errors import ValidationError
from ..Spectral import SampledSignal, SpectralSignal, forward_ft, inverse_ft
from ..Wavelets import WaveletSpec, dilate_translate, eval_spectrum
from .scalogram import ScaleGrid, Scalogram

SignalLike = Union[SampledSignal, WaveletSpec, Callable[[np.ndarray], np.ndarray]]


# --------------------------------------------------
# 频域逐尺度变换
# --------------------------------------------------
def _cwt_row(F: SpectralSignal, f: SampledSignal, psi: WaveletSpec, s: float) -> Tuple[np.ndarray, bool]:
    factor = np.conj(eval_spectrum(psi, s * F.frequencies)) * np.sqrt(s)
    if np.max(np.abs(factor)) < TRANSFORM_CONFIG["underflow_threshold"]:
        return np.zeros(f.grid.n, dtype=np.complex128), True
    row = inverse_ft(SpectralSignal(F.grid, F.values * factor), f.grid)
    return np.asarray(row.values, dtype=np.complex128), False


def cwt(f: SampledSignal, psi: WaveletSpec, scales: ScaleGrid, max_workers: Optional[int] = None) -> Scalogram:
    """
    在尺度网格上计算连续小波变换，平移固定为信号自身的网格点

    Args:
        f: 采样信号
        psi: 频谱可求值的小波
        scales: 尺度网格
        max_workers: 并行线程数，默认取 TRANSFORM_CONFIG

    Returns:
        Scalogram；频谱全部下溢的尺度返回零行并置 underflow 标记

    Raises:
        ValidationError: 小波频谱不可求值
    """
    if not psi.has_spectrum:
        raise ValidationError(f"小波 {psi.name} 的频谱不可求值，无法做频域 CWT")

    F = forward_ft(f)
    scale_values = scales.scales
    workers = max_workers or TRANSFORM_CONFIG["max_workers"]
    logger.debug(f"CWT: {psi.name}, {len(scale_values)} 个尺度, n={f.grid.n}, workers={workers}")

    # 每行相互独立，按尺度顺序收集结果
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(lambda s: _cwt_row(F, f, psi, float(s)), scale_values))

    coeffs = np.zeros((len(scale_values), f.grid.n), dtype=np.complex128)
    underflow: List[bool] = []
    for i, (row, flagged) in enumerate(results):
        coeffs[i] = row
        underflow.append(flagged)
        if flagged:
            logger.warning(f"尺度 s={scale_values[i]:.6g} 处 ψ̂(sω) 全部下溢，该行置零")
    return Scalogram(scales, f.grid, coeffs, tuple(underflow))


# --------------------------------------------------
# 直接求积
# --------------------------------------------------
def _sampled_evaluator(f: SampledSignal) -> Tuple[Callable, Tuple[float, float]]:
    """
    采样信号的三角插值 f(x) ≈ Σ_k F_k e^{2πiω_k x} dω，定义域取有效支撑
    """
    F = forward_ft(f)
    significant = np.abs(F.values) > 1e-16 * np.max(np.abs(F.values), initial=0.0)
    omega = F.frequencies[significant]
    weights = F.values[significant] * F.grid.domega

    def evaluate(x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        values = np.exp(2j * np.pi * np.outer(x, omega)) @ weights
        return values if f.is_complex else values.real

    magnitude = np.abs(f.values)
    peak = magnitude.max() if magnitude.size else 0.0
    if peak == 0.0:
        return evaluate, (0.0, 0.0)
    inside = np.nonzero(magnitude > TRANSFORM_CONFIG["sampled_support_rtol"] * peak)[0]
    points = f.points
    lo = points[max(inside[0] - 1, 0)]
    hi = points[min(inside[-1] + 1, f.grid.n - 1)]
    return evaluate, (float(lo), float(hi))


def _as_integrand_source(f: SignalLike) -> Tuple[Callable, Tuple[float, float], Tuple[float, ...], bool]:
    """统一成 (求值器, 定义域, 断点, 是否实值)"""
    if isinstance(f, SampledSignal):
        evaluate, domain = _sampled_evaluator(f)
        return evaluate, domain, (), not f.is_complex
    if isinstance(f, WaveletSpec):
        return f, f.support, f.breakpoints, f.is_real
    if callable(f):
        return f, (-math.inf, math.inf), (), False
    raise ValidationError(f"无法作为信号使用的对象: {type(f).__name__}")


def _pieces(lo: float, hi: float, breakpoints: Sequence[float]) -> List[Tuple[float, float]]:
    cuts = sorted(p for p in set(breakpoints) if lo < p < hi)
    edges = [lo, *cuts, hi]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def _quad_pairing(integrand: Callable[[float], complex], lo: float, hi: float,
                  breakpoints: Sequence[float], real: bool) -> complex:
    """分段自适应求积 ∫ integrand，返回复数"""
    options = {
        "limit": TRANSFORM_CONFIG["quad_limit"],
        "epsabs": TRANSFORM_CONFIG["quad_epsabs"],
        "epsrel": TRANSFORM_CONFIG["quad_epsrel"],
    }
    total_re, total_im, total_err = 0.0, 0.0, 0.0
    for a, b in _pieces(lo, hi, breakpoints):
        value, err = integrate.quad(lambda x: float(np.real(integrand(x))), a, b, **options)
        total_re += value
        total_err += err
        if not real:
            value, err = integrate.quad(lambda x: float(np.imag(integrand(x))), a, b, **options)
            total_im += value
            total_err += err
    logger.debug(f"求积区间 [{lo}, {hi}]，估计误差 {total_err:.3e}")
    return complex(total_re, total_im)


def cwt_single(f: SignalLike, psi: WaveletSpec, s: float, t: float, growth_order: int = 0) -> complex:
    """
    直接求积 ⟨f, ψ_{s,t}⟩ = ∫ f(x) conj(ψ_{s,t}(x)) dx，作为 cwt 的参考值

    积分域取 f 定义域与 ψ_{s,t} 有效支撑的交集，在断点处分段。

    Args:
        f: 求值器、WaveletSpec 或采样信号（采样信号用三角插值）
        psi: 小波
        s: 尺度 > 0
        t: 平移
        growth_order: f 的多项式增长阶 k，|f(x)| ≤ C(1+|x|)^k

    Raises:
        ValidationError: s ≤ 0，或 f 的增长超过 ψ 的衰减
    """
    if not s > 0:
        raise ValidationError(f"尺度 s 必须为正，实际 {s}")
    if growth_order > psi.integrable_growth():
        raise ValidationError(
            f"f 的增长阶 {growth_order} 超过 {psi.name} 的可积增长阶 {psi.integrable_growth()}"
        )

    evaluate, (f_lo, f_hi), f_breaks, f_real = _as_integrand_source(f)
    dilated = dilate_translate(psi, s, t)
    psi_lo, psi_hi = dilated.support
    lo, hi = max(f_lo, psi_lo), min(f_hi, psi_hi)
    if not hi > lo:
        return 0j

    def integrand(x):
        return complex(np.asarray(evaluate(x)).ravel()[0]) * np.conj(complex(np.asarray(dilated(x)).ravel()[0]))

    return _quad_pairing(integrand, lo, hi, (*f_breaks, *dilated.breakpoints), f_real and psi.is_real)


def interchange(f: SignalLike, psi: WaveletSpec, s: float, t: float) -> complex:
    """
    ⟨f_{1/s, −t/s}, ψ⟩，其中 f_{1/s,−t/s}(x) = s^{1/2} f(sx + t)

    与 cwt_single(f, ψ, s, t) 相等（信号与小波角色互换）。
    """
    if not s > 0:
        raise ValidationError(f"尺度 s 必须为正，实际 {s}")
    evaluate, (f_lo, f_hi), f_breaks, f_real = _as_integrand_source(f)
    lo = max((f_lo - t) / s, psi.support[0])
    hi = min((f_hi - t) / s, psi.support[1])
    if not hi > lo:
        return 0j
    root = math.sqrt(s)

    def integrand(x):
        value = complex(np.asarray(evaluate(s * x + t)).ravel()[0])
        return root * value * np.conj(complex(np.asarray(psi(x)).ravel()[0]))

    breaks = (*((p - t) / s for p in f_breaks), *psi.breakpoints)
    return _quad_pairing(integrand, lo, hi, breaks, f_real and psi.is_real)


# --------------------------------------------------
# 能量
# --------------------------------------------------
def plancherel_energy(W: Scalogram) -> float:
    """
    ∫∫ |W(s,t)|² dt ds/s² 的离散近似 Σ_i w_i Σ_k |W_ik|² dt

    Raises:
        ValidationError: 显式尺度网格
    """
    weights = W.scales.log_weights()
    row_energy = np.sum(np.abs(W.coeffs) ** 2, axis=1) * W.translations.dx
    return float(np.dot(weights, row_energy))


def signal_energy(f: SampledSignal) -> float:
    """‖f‖₂² ≈ Σ|f|² dx"""
    return float(np.sum(np.abs(f.values) ** 2) * f.grid.dx)
