"""
小波动物园
高斯、高斯导数、墨西哥帽、Poisson 核及其导数、Haar，以及采样小波

频谱均采用 ψ̂(ω) = ∫ ψ(x) e^{-2πiωx} dx 约定。
decay_order 记录逐点衰减指数 p：|ψ(x)| ≤ C(1+|x|)^{-p}，
因此 ψ(x)(1+|x|)^k 可积当且仅当 k ≤ p − 2（整数 k）。
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger
from numpy.polynomial import hermite_e
from scipy.interpolate import CubicSpline

from ..common.config import WAVELET_CONFIG
from ..common.errors import ValidationError
from ..Spectral import SampledSignal, SpectralSignal, UniformGrid, forward_ft

Evaluator = Callable[[np.ndarray], np.ndarray]

SCHWARTZ_DECAY = math.inf


class WaveletKind(str, Enum):
    GAUSSIAN = "gaussian"
    GAUSSIAN_DERIVATIVE = "gaussian_derivative"
    MEXICAN_HAT = "mexican_hat"
    POISSON = "poisson"
    POISSON_DERIVATIVE = "poisson_derivative"
    HAAR = "haar"
    SAMPLED = "sampled"
    CUSTOM = "custom"


KIND_ALIASES = {"mexican": WaveletKind.MEXICAN_HAT, "ricker": WaveletKind.MEXICAN_HAT}


@dataclass(frozen=True, eq=False)
class WaveletSpec:
    """
    小波描述：时域求值器、可选闭式频谱与衰减元数据

    Attributes:
        kind: 小波种类
        time_eval: x ↦ ψ(x)
        spectrum_eval: ω ↦ ψ̂(ω)，闭式已知时提供
        decay_order: 逐点衰减指数（紧支撑或高斯型为 inf）
        params: 构造参数
        support: 有效支撑区间，区间外 |ψ| 低于峰值的 1e-12
        breakpoints: 不光滑点（分段积分用）
        sampled: 采样小波的原始采样
        is_real: 时域是否实值
    """

    kind: WaveletKind
    time_eval: Evaluator
    spectrum_eval: Optional[Evaluator] = None
    decay_order: float = SCHWARTZ_DECAY
    params: Dict[str, Any] = field(default_factory=dict)
    support: Tuple[float, float] = (-math.inf, math.inf)
    breakpoints: Tuple[float, ...] = ()
    sampled: Optional[SampledSignal] = None
    is_real: bool = True
    _cached_spectrum: Optional[SpectralSignal] = field(default=None, repr=False)
    _interpolator: Optional[CubicSpline] = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind == WaveletKind.SAMPLED and self.sampled is not None and self._cached_spectrum is None:
            # 采样小波在构造时缓存频谱
            spectrum = forward_ft(self.sampled)
            object.__setattr__(self, "_cached_spectrum", spectrum)
            object.__setattr__(self, "_interpolator", CubicSpline(spectrum.frequencies, spectrum.values))

    def __call__(self, x) -> np.ndarray:
        return self.time_eval(np.asarray(x, dtype=float))

    @property
    def name(self) -> str:
        if self.kind == WaveletKind.GAUSSIAN_DERIVATIVE:
            return f"{self.kind.value}({self.params.get('order')})"
        return self.kind.value

    @property
    def has_spectrum(self) -> bool:
        return self.spectrum_eval is not None or self._interpolator is not None

    @property
    def cached_spectrum(self) -> Optional[SpectralSignal]:
        return self._cached_spectrum

    def spectrum(self, omega) -> np.ndarray:
        return eval_spectrum(self, omega)

    def integrable_growth(self) -> float:
        """ψ(x)(1+|x|)^k 可积的最大整数 k"""
        return self.decay_order - 2


@dataclass(frozen=True)
class DilatedWavelet:
    """
    ψ_{s,t}(x) = s^{-1/2} ψ((x−t)/s)

    Attributes:
        base: 基小波
        s: 尺度
        t: 平移
    """

    base: WaveletSpec
    s: float
    t: float = 0.0

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.base((x - self.t) / self.s) / np.sqrt(self.s)

    def spectrum(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        return eval_spectrum(self.base, self.s * omega) * np.exp(-2j * np.pi * omega * self.t) * np.sqrt(self.s)

    @property
    def support(self) -> Tuple[float, float]:
        lo, hi = self.base.support
        return self.t + self.s * lo, self.t + self.s * hi

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return tuple(self.t + self.s * p for p in self.base.breakpoints)


# --------------------------------------------------
# 各种类的时域与频域表达式
# --------------------------------------------------
def _gaussian_time(x):
    return np.exp(-np.pi * x ** 2)


def _gaussian_spectrum(omega):
    return np.exp(-np.pi * np.asarray(omega, dtype=float) ** 2).astype(np.complex128)


def _hermite_time(order: int) -> Evaluator:
    # d^m/dx^m e^{-x²/2} = (-1)^m He_m(x) e^{-x²/2}
    coefficients = np.zeros(order + 1)
    coefficients[order] = (-1.0) ** order

    def evaluate(x):
        return hermite_e.hermeval(x, coefficients) * np.exp(-0.5 * x ** 2)

    return evaluate


def _hermite_spectrum(order: int) -> Evaluator:
    def evaluate(omega):
        omega = np.asarray(omega, dtype=float)
        return (2j * np.pi * omega) ** order * np.sqrt(2 * np.pi) * np.exp(-2 * np.pi ** 2 * omega ** 2)

    return evaluate


def _mexican_time(x):
    return (1.0 - x ** 2) * np.exp(-0.5 * x ** 2)


def _mexican_spectrum(omega):
    omega = np.asarray(omega, dtype=float)
    values = 4 * np.pi ** 2 * omega ** 2 * np.sqrt(2 * np.pi) * np.exp(-2 * np.pi ** 2 * omega ** 2)
    return values.astype(np.complex128)


def _poisson_time(x):
    return 1.0 / (np.pi * (1.0 + x ** 2))


def _poisson_spectrum(omega):
    return np.exp(-2 * np.pi * np.abs(np.asarray(omega, dtype=float))).astype(np.complex128)


def _poisson_derivative_time(x):
    return -2.0 * x / (np.pi * (1.0 + x ** 2) ** 2)


def _poisson_derivative_spectrum(omega):
    omega = np.asarray(omega, dtype=float)
    return 2j * np.pi * omega * np.exp(-2 * np.pi * np.abs(omega))


def _haar_time(x):
    x = np.asarray(x, dtype=float)
    return np.where((x >= 0.0) & (x < 0.5), 1.0, 0.0) - np.where((x >= 0.5) & (x < 1.0), 1.0, 0.0)


def _haar_spectrum(omega):
    # (1 − e^{-iπω})² / (2πiω)，ω = 0 处取极限 0
    omega = np.asarray(omega, dtype=float)
    safe = np.where(omega == 0.0, 1.0, omega)
    values = (1.0 - np.exp(-1j * np.pi * safe)) ** 2 / (2j * np.pi * safe)
    return np.where(omega == 0.0, 0.0 + 0.0j, values)


# --------------------------------------------------
# 构造入口
# --------------------------------------------------
def _resolve_kind(kind: Union[str, WaveletKind]) -> WaveletKind:
    if isinstance(kind, WaveletKind):
        return kind
    key = str(kind).strip().lower()
    if key in KIND_ALIASES:
        return KIND_ALIASES[key]
    try:
        return WaveletKind(key)
    except ValueError:
        raise ValidationError(f"未知的小波种类: {kind}。可用种类: {[k.value for k in WaveletKind]}")


def make_wavelet(kind: Union[str, WaveletKind], params: Optional[Dict[str, Any]] = None) -> WaveletSpec:
    """
    按种类构造小波

    Args:
        kind: 种类名（支持别名 mexican / ricker）
        params: gaussian_derivative 需要 order；sampled 需要 signal；custom 需要 time_eval

    Returns:
        WaveletSpec

    Raises:
        ValidationError: 未知种类或参数非法
    """
    params = dict(params or {})
    kind = _resolve_kind(kind)
    gaussian_radius = WAVELET_CONFIG["gaussian_radius"]
    hermite_radius = WAVELET_CONFIG["hermite_radius"]

    if kind == WaveletKind.GAUSSIAN:
        return WaveletSpec(kind, _gaussian_time, _gaussian_spectrum, SCHWARTZ_DECAY, params,
                           support=(-gaussian_radius, gaussian_radius))

    if kind == WaveletKind.GAUSSIAN_DERIVATIVE:
        order = params.setdefault("order", WAVELET_CONFIG["default_derivative_order"])
        if int(order) != order or order < 1:
            raise ValidationError(f"gaussian_derivative 阶数必须是正整数，实际 {order}")
        order = int(order)
        params["order"] = order
        return WaveletSpec(kind, _hermite_time(order), _hermite_spectrum(order), SCHWARTZ_DECAY, params,
                           support=(-hermite_radius, hermite_radius))

    if kind == WaveletKind.MEXICAN_HAT:
        return WaveletSpec(kind, _mexican_time, _mexican_spectrum, SCHWARTZ_DECAY, params,
                           support=(-hermite_radius, hermite_radius))

    if kind == WaveletKind.POISSON:
        return WaveletSpec(kind, _poisson_time, _poisson_spectrum, 2, params)

    if kind == WaveletKind.POISSON_DERIVATIVE:
        return WaveletSpec(kind, _poisson_derivative_time, _poisson_derivative_spectrum, 3, params)

    if kind == WaveletKind.HAAR:
        return WaveletSpec(kind, _haar_time, _haar_spectrum, SCHWARTZ_DECAY, params,
                           support=(0.0, 1.0), breakpoints=(0.0, 0.5, 1.0))

    if kind == WaveletKind.SAMPLED:
        signal = params.get("signal")
        if not isinstance(signal, SampledSignal):
            raise ValidationError("sampled 小波需要参数 signal: SampledSignal")
        points = signal.grid.points
        return WaveletSpec(kind, signal.evaluate, None, SCHWARTZ_DECAY, params,
                           support=(float(points[0]), float(points[-1])),
                           sampled=signal, is_real=not signal.is_complex)

    time_eval = params.get("time_eval")
    if not callable(time_eval):
        raise ValidationError("custom 小波需要可调用参数 time_eval")
    return WaveletSpec(kind, time_eval, params.get("spectrum_eval"), params.get("decay_order", 0),
                       params, support=tuple(params.get("support", (-math.inf, math.inf))),
                       is_real=params.get("is_real", False))


def dilate_translate(psi: Union[WaveletSpec, DilatedWavelet], s: float, t: float) -> DilatedWavelet:
    """
    ψ ↦ ψ_{s,t}；作用在已伸缩的小波上时按群律合成

    Raises:
        ValidationError: s ≤ 0
    """
    if not s > 0:
        raise ValidationError(f"尺度 s 必须为正，实际 {s}")
    if isinstance(psi, DilatedWavelet):
        # D_{s,t} D_{s0,t0} = D_{s·s0, t + s·t0}
        return DilatedWavelet(psi.base, s * psi.s, t + s * psi.t)
    return DilatedWavelet(psi, float(s), float(t))


def eval_spectrum(psi: WaveletSpec, omega) -> np.ndarray:
    """
    ψ̂(ω)：闭式优先，否则对缓存的细采样频谱做三次样条插值（缓存范围外取 0）

    Raises:
        ValidationError: 既无闭式频谱也无采样网格
    """
    omega = np.asarray(omega, dtype=float)
    if psi.spectrum_eval is not None:
        return np.asarray(psi.spectrum_eval(omega), dtype=np.complex128)
    if psi._interpolator is None:
        raise ValidationError(f"小波 {psi.name} 没有闭式频谱，也没有可缓存的采样网格")
    freqs = psi._cached_spectrum.frequencies
    inside = (omega >= freqs[0]) & (omega <= freqs[-1])
    return np.where(inside, psi._interpolator(np.clip(omega, freqs[0], freqs[-1])), 0.0 + 0.0j)


def conjugate(psi: WaveletSpec) -> WaveletSpec:
    """
    φ = conj(ψ)，频谱 φ̂(ω) = conj(ψ̂(−ω))；实值小波原样返回
    """
    if psi.is_real:
        return psi

    def time_eval(x):
        return np.conj(psi(x))

    def spectrum_eval(omega):
        return np.conj(eval_spectrum(psi, -np.asarray(omega, dtype=float)))

    return WaveletSpec(WaveletKind.CUSTOM, time_eval, spectrum_eval, psi.decay_order,
                       {"conjugate_of": psi.name}, support=psi.support,
                       breakpoints=psi.breakpoints, is_real=False)


def l1_dilate(psi: WaveletSpec, a: float) -> WaveletSpec:
    """
    ψ ↦ ψ(·/a)/a（L¹ 归一伸缩），频谱 ψ̂(aω)
    """
    if not a > 0:
        raise ValidationError(f"伸缩因子必须为正，实际 {a}")
    lo, hi = psi.support

    def time_eval(x):
        return psi(np.asarray(x, dtype=float) / a) / a

    def spectrum_eval(omega):
        return eval_spectrum(psi, a * np.asarray(omega, dtype=float))

    return WaveletSpec(WaveletKind.CUSTOM, time_eval, spectrum_eval, psi.decay_order,
                       {"l1_dilate_of": psi.name, "a": a}, support=(a * lo, a * hi),
                       breakpoints=tuple(a * p for p in psi.breakpoints), is_real=psi.is_real)


def as_wavelet(f: Union[WaveletSpec, SampledSignal, Evaluator], decay_order: float = 0) -> WaveletSpec:
    """
    把信号包装成 WaveletSpec，便于信号与小波角色互换
    """
    if isinstance(f, WaveletSpec):
        return f
    if isinstance(f, SampledSignal):
        return make_wavelet(WaveletKind.SAMPLED, {"signal": f})
    return make_wavelet(WaveletKind.CUSTOM, {"time_eval": f, "decay_order": decay_order})


def spectrum_family(psi: WaveletSpec) -> str:
    """细采样网格与一致性容差所属的族：smooth / poisson / haar"""
    if psi.kind in (WaveletKind.POISSON, WaveletKind.POISSON_DERIVATIVE):
        return "poisson"
    if psi.kind == WaveletKind.HAAR:
        return "haar"
    return "smooth"


def fine_sampling(psi: WaveletSpec) -> SampledSignal:
    """
    按文档化的细采样网格对小波采样
    """
    spec = WAVELET_CONFIG["fine_grids"][spectrum_family(psi)]
    grid = UniformGrid(spec["x_min"], (spec["x_max"] - spec["x_min"]) / spec["n"], spec["n"])
    logger.debug(f"细采样 {psi.name}: [{spec['x_min']}, {spec['x_max']}), n={spec['n']}")
    return SampledSignal(grid, psi(grid.points))


# --------------------------------------------------
# 注册表
# --------------------------------------------------
WAVELET_REGISTRY: Dict[str, Dict[str, Any]] = {
    "gaussian": {"description": "e^{-πx²}，自对偶，ψ̂(0)=1", "closed_form_spectrum": True},
    "gaussian_derivative": {"description": "d^m/dx^m e^{-x²/2}，参数 order ≥ 1", "closed_form_spectrum": True},
    "mexican_hat": {"description": "(1−x²)e^{-x²/2}，别名 mexican / ricker", "closed_form_spectrum": True},
    "poisson": {"description": "1/(π(1+x²))，ψ̂ = e^{-2π|ω|}", "closed_form_spectrum": True},
    "poisson_derivative": {"description": "−2x/(π(1+x²)²)，ψ̂ = 2πiω e^{-2π|ω|}", "closed_form_spectrum": True},
    "haar": {"description": "[0,1/2) 上为 1，[1/2,1) 上为 −1", "closed_form_spectrum": True},
    "sampled": {"description": "来自 CSV 的采样小波，频谱由 FFT 缓存插值", "closed_form_spectrum": False},
}


def list_wavelets() -> List[Dict[str, Any]]:
    """按固定顺序列出可用小波"""
    return [{"name": name, **info} for name, info in WAVELET_REGISTRY.items()]
