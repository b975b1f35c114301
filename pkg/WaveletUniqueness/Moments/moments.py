"""
小波矩与多项式配对

M_ℓ = ∫ x^ℓ ψ(x) dx
⟨f, ψ_{s,t}⟩ = s^{1/2} Σ_ℓ c_ℓ Σ_{i≤ℓ} C(ℓ,i) t^{ℓ−i} s^i conj(M_i)，f(x) = Σ c_ℓ x^ℓ
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from numpy.polynomial import polynomial as P
from scipy import integrate

from ..common.config import MOMENTS_CONFIG, TRANSFORM_CONFIG
from ..common.errors import DegenerateLeadingCoefficient, ValidationError
from ..Wavelets import WaveletSpec


@dataclass(frozen=True)
class PolynomialSignal:
    """
    f(x) = Σ c_ℓ x^ℓ，系数去掉末尾零后存储；零多项式存为 (0.0,)
    """

    coeffs: Tuple[float, ...]

    def __post_init__(self):
        values = np.asarray(self.coeffs, dtype=float).ravel()
        if values.size == 0 or not np.all(np.isfinite(values)):
            raise ValidationError(f"多项式系数必须为非空有限实数: {self.coeffs}")
        trimmed = np.trim_zeros(values, "b")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in trimmed) or (0.0,))

    @classmethod
    def monomial(cls, degree: int, coeff: float = 1.0) -> "PolynomialSignal":
        return cls((0.0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __call__(self, x) -> np.ndarray:
        return P.polyval(np.asarray(x, dtype=float), self.coeffs)


@dataclass(frozen=True)
class MomentVector:
    """
    M_0..M_L 以及逐项误差界

    Attributes:
        values: 矩（实小波为实数，否则为复数）
        errors: 每项的误差界（求积误差 + 截尾估计，或拟合残差）
        source: 来源说明（小波名或 "recovered"）
    """

    values: np.ndarray
    errors: np.ndarray
    source: str = ""

    def __post_init__(self):
        values = np.array(self.values, copy=True).ravel()
        errors = np.array(self.errors, dtype=float, copy=True).ravel()
        if values.shape != errors.shape:
            raise ValidationError(f"矩与误差界长度不一致: {values.shape} vs {errors.shape}")
        if not np.all(np.isfinite(values)):
            raise ValidationError("矩必须是有限值")
        values.setflags(write=False)
        errors.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "errors", errors)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int):
        return self.values[index]

    def to_dict(self) -> List[Dict[str, object]]:
        return [
            {"order": ell, "value": complex(v) if np.iscomplexobj(self.values) else float(v), "error": float(e)}
            for ell, (v, e) in enumerate(zip(self.values, self.errors))
        ]


# --------------------------------------------------
# 矩的求积
# --------------------------------------------------
def _check_decay(psi: WaveletSpec, order: int) -> None:
    if int(order) != order or order < 0:
        raise ValidationError(f"矩阶数必须是非负整数，实际 {order}")
    if order > psi.integrable_growth():
        raise ValidationError(
            f"{psi.name} 的衰减阶 {psi.decay_order} 不足以定义 {order} 阶矩（需要 ≥ {order + 2}）"
        )


def _pieces(psi: WaveletSpec) -> List[Tuple[float, float]]:
    lo, hi = psi.support
    cuts = sorted(p for p in set(psi.breakpoints) if lo < p < hi)
    if math.isinf(lo) and math.isinf(hi):
        cuts = sorted(set(cuts) | {0.0})
    edges = [lo, *cuts, hi]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def _tail_estimate(psi: WaveletSpec, order: int) -> float:
    """有限截断时 |x|^ℓ|ψ(x)| 在两端的量级乘以截断半径；无截断或紧支撑为 0"""
    lo, hi = psi.support
    if math.isinf(lo) or math.isinf(hi):
        return 0.0
    if lo in psi.breakpoints and hi in psi.breakpoints:
        return 0.0
    edges = np.array([lo, hi])
    radius = float(np.max(np.abs(edges)))
    return radius * float(np.sum(np.abs(edges) ** order * np.abs(psi(edges))))


def _quad(func, a: float, b: float) -> Tuple[float, float]:
    value, err = integrate.quad(
        func, a, b,
        limit=MOMENTS_CONFIG["quad_limit"],
        epsabs=TRANSFORM_CONFIG["quad_epsabs"],
        epsrel=TRANSFORM_CONFIG["quad_epsrel"],
    )
    return value, err


def _moment_with_error(psi: WaveletSpec, order: int) -> Tuple[complex, float]:
    real_total, imag_total, error = 0.0, 0.0, 0.0
    for a, b in _pieces(psi):
        value, err = _quad(lambda x: float(np.real(x ** order * psi(x))), a, b)
        real_total += value
        error += err
        if not psi.is_real:
            value, err = _quad(lambda x: float(np.imag(x ** order * psi(x))), a, b)
            imag_total += value
            error += err

    tail = _tail_estimate(psi, order)
    if tail > MOMENTS_CONFIG["tail_tolerance"] * max(abs(complex(real_total, imag_total)), 1.0):
        logger.warning(f"{psi.name} 的 {order} 阶矩截尾估计 {tail:.3e} 超过容差")
    return complex(real_total, imag_total), error + tail


def moment(psi: WaveletSpec, order: int):
    """
    M_ℓ = ∫ x^ℓ ψ(x) dx，在断点处分段做自适应求积

    Args:
        psi: 小波
        order: 阶数 ℓ ≥ 0

    Returns:
        实小波返回 float，否则返回 complex

    Raises:
        ValidationError: 衰减不足（decay_order < ℓ + 2）
    """
    _check_decay(psi, order)
    value, _ = _moment_with_error(psi, order)
    return value.real if psi.is_real else value


def moment_vector(psi: WaveletSpec, max_order: int) -> MomentVector:
    """
    M_0..M_L 及误差界

    Raises:
        ValidationError: 衰减不足以定义 M_L
    """
    _check_decay(psi, max_order)
    results = [_moment_with_error(psi, ell) for ell in range(max_order + 1)]
    values = np.array([v for v, _ in results])
    if psi.is_real:
        values = values.real
    errors = np.array([e for _, e in results])
    logger.debug(f"{psi.name} 的矩 M_0..M_{max_order}: {values}")
    return MomentVector(values, errors, psi.name)


def vanishing_moment_order(psi: WaveletSpec, tol: float = 1e-8, max_order: int = 4) -> int:
    """
    最小的 ℓ ≤ L_max 使 |M_ℓ| > tol；全部消失时返回 L_max + 1

    Raises:
        ValidationError: 衰减不足以覆盖 L_max，或 tol ≤ 0
    """
    if not tol > 0:
        raise ValidationError(f"容差必须为正，实际 {tol}")
    _check_decay(psi, max_order)
    for ell in range(max_order + 1):
        if abs(moment(psi, ell)) > tol:
            return ell
    return max_order + 1


# --------------------------------------------------
# 多项式配对与矩恢复
# --------------------------------------------------
def _pairing_t_coefficients(f: PolynomialSignal, moments: Sequence[complex], s: float) -> np.ndarray:
    """配对作为 t 的多项式的系数 a_0..a_m"""
    m = f.degree
    conj_moments = np.conj(np.asarray(moments, dtype=np.complex128))
    coeffs = np.zeros(m + 1, dtype=np.complex128)
    for k in range(m + 1):
        coeffs[k] = sum(
            f.coeffs[k + i] * math.comb(k + i, i) * s ** i * conj_moments[i] for i in range(m - k + 1)
        )
    return math.sqrt(s) * coeffs


def polynomial_pairing(f: PolynomialSignal, psi: WaveletSpec, s: float, t: float,
                       moments: Optional[MomentVector] = None) -> complex:
    """
    ⟨f, ψ_{s,t}⟩ 的二项式展开精确值

    Args:
        f: 多项式信号
        psi: 小波
        s: 尺度 > 0
        t: 平移
        moments: 已算好的 M_0..M_m，缺省时现算

    Raises:
        ValidationError: s ≤ 0，衰减不足，或给定的矩阶数不够
    """
    if not s > 0:
        raise ValidationError(f"尺度 s 必须为正，实际 {s}")
    _check_decay(psi, f.degree)
    moments = moments if moments is not None else moment_vector(psi, f.degree)
    if moments.order < f.degree:
        raise ValidationError(f"需要 M_0..M_{f.degree}，只提供到 M_{moments.order}")
    coeffs = _pairing_t_coefficients(f, moments.values[: f.degree + 1], float(s))
    return complex(P.polyval(float(t), coeffs))


def moment_recovery(t_samples: Sequence[float], pairing_samples: Sequence[complex],
                    f: PolynomialSignal, s: float) -> MomentVector:
    """
    由 t ↦ ⟨f, ψ_{s,t}⟩ 的采样恢复 M_0..M_m

    先在 t 上拟合 m 次多项式，再从最高次系数开始逐级回代：
    a_m 只含 conj(M_0)·c_m，a_{m−1} 含 M_0 与 M_1，依此类推。

    Raises:
        DegenerateLeadingCoefficient: c_m = 0
        ValidationError: 采样点少于 m + 1、有重复，或 s ≤ 0
    """
    if f.is_zero or f.leading == 0:
        raise DegenerateLeadingCoefficient("多项式最高次系数为零，无法逐级恢复矩")
    if not s > 0:
        raise ValidationError(f"尺度 s 必须为正，实际 {s}")
    t = np.asarray(t_samples, dtype=float).ravel()
    y = np.asarray(pairing_samples).ravel()
    m = f.degree
    if t.shape != y.shape:
        raise ValidationError(f"t 采样与配对采样长度不一致: {t.shape} vs {y.shape}")
    if len(np.unique(t)) != len(t) or len(t) < m + 1:
        raise ValidationError(f"需要至少 {m + 1} 个互不相同的 t 采样点，实际 {len(t)}")

    vander = P.polyvander(t, m)
    condition = float(np.linalg.cond(vander))
    coeffs, _, _, _ = np.linalg.lstsq(vander, y.astype(np.complex128), rcond=None)
    residual = float(np.max(np.abs(vander @ coeffs - y), initial=0.0))
    if condition > MOMENTS_CONFIG["condition_limit"]:
        logger.warning(f"矩恢复的 Vandermonde 矩阵病态: cond={condition:.3e}, 残差 {residual:.3e}")

    root = math.sqrt(s)
    conj_moments = np.zeros(m + 1, dtype=np.complex128)
    for n in range(m + 1):
        k = m - n
        known = sum(f.coeffs[k + i] * math.comb(k + i, i) * s ** i * conj_moments[i] for i in range(n))
        conj_moments[n] = (coeffs[k] / root - known) / (f.leading * math.comb(m, n) * s ** n)

    values = np.conj(conj_moments)
    if np.isrealobj(y):
        values = values.real
    logger.info(f"矩恢复完成: m={m}, s={s:g}, cond={condition:.3e}, 残差 {residual:.3e}")
    return MomentVector(values, np.full(m + 1, residual), "recovered")
