"""
方向性非平凡性（Tauberian）检查、Calderón 容许常数与唯一性证书

一维情形下单位球面只有两侧 {+, −}，方向积分退化为两侧分别计算。
"""

from dataclasses import asdict, dataclass
from enum import IntEnum
from typing import Any, Dict, NamedTuple, Optional, Tuple, Union

import numpy as np
from loguru import logger
from numpy.polynomial import legendre

from ..common.config import ADMISSIBILITY_CONFIG
from ..common.errors import ValidationError
from ..Spectral import SampledSignal, SpectralSignal, forward_ft
from ..Wavelets import WaveletSpec, eval_spectrum, fine_sampling

DIVERGENT = "DIVERGENT"

CalderonValue = Union[float, str]


class Side(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    @property
    def label(self) -> str:
        return "+" if self is Side.POSITIVE else "-"


def as_side(side: Union[Side, int]) -> Side:
    """把 ±1 或 Side 统一为 Side；其他取值抛出 ValidationError"""
    try:
        return Side(side)
    except ValueError as e:
        raise ValidationError(f"方向必须为 +1 或 -1，实际 {side!r}") from e


class TauberianResult(NamedTuple):
    passed: bool
    measure: float


# --------------------------------------------------
# 径向扫描
# --------------------------------------------------
def scan_cells(log2_min: int = None, log2_max: int = None,
                points_per_octave: int = None) -> Tuple[np.ndarray, np.ndarray]:
    """对数网格的单元中点（几何平均）与单元宽度 dr"""
    log2_min = ADMISSIBILITY_CONFIG["scan_log2_min"] if log2_min is None else log2_min
    log2_max = ADMISSIBILITY_CONFIG["scan_log2_max"] if log2_max is None else log2_max
    ppo = points_per_octave or ADMISSIBILITY_CONFIG["points_per_octave"]
    edges = 2.0 ** (np.arange(log2_min * ppo, log2_max * ppo + 1) / ppo)
    return np.sqrt(edges[:-1] * edges[1:]), np.diff(edges)


def spectrum_sup(psi: WaveletSpec) -> float:
    """扫描网格两侧上 |ψ̂| 的最大值"""
    radii, _ = scan_cells()
    values = np.concatenate([np.abs(eval_spectrum(psi, radii)), np.abs(eval_spectrum(psi, -radii))])
    return float(values.max())


def default_threshold(psi: WaveletSpec) -> float:
    """默认 τ = relative_threshold·sup|ψ̂|"""
    return ADMISSIBILITY_CONFIG["relative_threshold"] * spectrum_sup(psi)


def tauberian_check(psi: WaveletSpec, side: Side, tau: Optional[float] = None) -> TauberianResult:
    """
    检查 {r > 0 : |ψ̂(σr)| > τ} 是否有正测度

    Args:
        psi: 小波
        side: 方向 σ
        tau: 阈值，默认 1e-9·sup|ψ̂|

    Returns:
        TauberianResult(passed, measure)；measure 为超过阈值的单元宽度之和

    Raises:
        ValidationError: τ ≤ 0
    """
    side = as_side(side)
    if tau is None:
        tau = default_threshold(psi)
    if not tau > 0:
        raise ValidationError(f"阈值 τ 必须为正，实际 {tau}")
    radii, widths = scan_cells()
    exceeds = np.abs(eval_spectrum(psi, int(side) * radii)) > tau
    measure = float(np.sum(widths[exceeds]))
    logger.debug(f"Tauberian {psi.name} 侧 {side.label}: τ={tau:.3e}, 测度 {measure:.6g}")
    return TauberianResult(bool(exceeds.any()), measure)


# --------------------------------------------------
# Calderón 常数
# --------------------------------------------------
def calderon_constant(psi: WaveletSpec, side: Side) -> CalderonValue:
    """
    ∫₀^∞ |ψ̂(σs)|² ds/s

    代换 s = e^v 后按十倍程做 Gauss-Legendre 求积；最靠近 0 或 ∞ 的十倍程贡献
    若不低于 cauchy_tolerance·总和，判定为 DIVERGENT。
    """
    side = as_side(side)
    decades = ADMISSIBILITY_CONFIG["decades"]
    nodes, weights = legendre.leggauss(ADMISSIBILITY_CONFIG["nodes_per_decade"])
    ln10 = np.log(10.0)

    contributions = []
    for k in range(-decades, decades):
        lo, hi = k * ln10, (k + 1) * ln10
        v = 0.5 * (hi - lo) * nodes + 0.5 * (hi + lo)
        values = np.abs(eval_spectrum(psi, int(side) * np.exp(v))) ** 2
        contributions.append(0.5 * (hi - lo) * float(np.dot(weights, values)))

    total = float(np.sum(contributions))
    tolerance = ADMISSIBILITY_CONFIG["cauchy_tolerance"]
    if total == 0.0:
        return 0.0
    near_zero, near_infinity = contributions[0], contributions[-1]
    if near_zero > tolerance * total or near_infinity > tolerance * total:
        logger.info(
            f"Calderón 积分 {psi.name} 侧 {side.label} 发散: "
            f"端部十倍程贡献 {near_zero:.3e} / {near_infinity:.3e}，总和 {total:.3e}"
        )
        return DIVERGENT
    return total


# --------------------------------------------------
# 方向能量与唯一性证书
# --------------------------------------------------
def directional_energy(g: SpectralSignal, side: Side) -> float:
    """Σ_{σω>0} |ĝ(ω)|² dω"""
    side = as_side(side)
    freqs = g.frequencies
    mask = freqs > 0 if side is Side.POSITIVE else freqs < 0
    return float(np.sum(np.abs(g.values[mask]) ** 2) * g.grid.domega)


@dataclass(frozen=True)
class SideCertificate:
    side: Side
    signal_energy: float
    wavelet_energy: float

    @property
    def product(self) -> float:
        return self.signal_energy * self.wavelet_energy

    def to_dict(self) -> Dict[str, Any]:
        return {
            "side": self.side.label,
            "signal_energy": self.signal_energy,
            "wavelet_energy": self.wavelet_energy,
            "product": self.product,
        }


@dataclass(frozen=True)
class UniquenessCertificate:
    """
    两侧的能量乘积 P_σ = E_σ(f̂)·E_σ(ψ̂)

    CWT 恒为零时两侧乘积都必须为零；小波两侧能量都为正时，乘积为零迫使 f 为零。
    """

    positive: SideCertificate
    negative: SideCertificate

    def products_vanish(self, rtol: float = 1e-8) -> bool:
        scale = max(self.positive.signal_energy, self.negative.signal_energy) * max(
            self.positive.wavelet_energy, self.negative.wavelet_energy)
        return self.positive.product <= rtol * scale and self.negative.product <= rtol * scale

    def to_dict(self) -> Dict[str, Any]:
        return {"positive": self.positive.to_dict(), "negative": self.negative.to_dict()}


def uniqueness_certificate(f: SampledSignal, psi: WaveletSpec) -> UniquenessCertificate:
    """
    在 f 的频率网格上计算两侧的方向能量及其乘积
    """
    F = forward_ft(f)
    psi_hat = SpectralSignal(F.grid, eval_spectrum(psi, F.frequencies))
    sides = {}
    for side in Side:
        sides[side] = SideCertificate(side, directional_energy(F, side), directional_energy(psi_hat, side))
    certificate = UniquenessCertificate(sides[Side.POSITIVE], sides[Side.NEGATIVE])
    logger.info(f"唯一性证书 {psi.name}: P+={certificate.positive.product:.3e}, P-={certificate.negative.product:.3e}")
    return certificate


# --------------------------------------------------
# 汇总报告
# --------------------------------------------------
@dataclass(frozen=True)
class SideReport:
    side: Side
    tauberian: bool
    tauberian_measure: float
    calderon: CalderonValue
    directional_energy: float

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["side"] = self.side.label
        return data


@dataclass(frozen=True)
class AdmissibilityReport:
    wavelet: str
    tau: float
    positive: SideReport
    negative: SideReport

    @property
    def tauberian_both_sides(self) -> bool:
        return self.positive.tauberian and self.negative.tauberian

    @property
    def calderon_finite(self) -> bool:
        return self.positive.calderon != DIVERGENT and self.negative.calderon != DIVERGENT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "wavelet": self.wavelet,
            "tau": self.tau,
            "sides": [self.positive.to_dict(), self.negative.to_dict()],
            "tauberian_both_sides": self.tauberian_both_sides,
            "calderon_finite": self.calderon_finite,
        }


def _wavelet_spectrum(psi: WaveletSpec) -> SpectralSignal:
    if psi.cached_spectrum is not None:
        return psi.cached_spectrum
    grid = fine_sampling(psi).grid.spectral_grid()
    return SpectralSignal(grid, eval_spectrum(psi, grid.frequencies))


def admissibility_report(psi: WaveletSpec, tau: Optional[float] = None) -> AdmissibilityReport:
    """
    两侧的 Tauberian 检查、Calderón 常数与方向能量
    """
    if tau is None:
        tau = default_threshold(psi)
    spectrum = _wavelet_spectrum(psi)
    reports = {}
    for side in Side:
        passed, measure = tauberian_check(psi, side, tau)
        reports[side] = SideReport(side, passed, measure, calderon_constant(psi, side),
                                   directional_energy(spectrum, side))
    report = AdmissibilityReport(psi.name, float(tau), reports[Side.POSITIVE], reports[Side.NEGATIVE])
    logger.info(
        f"容许性报告 {psi.name}: Tauberian 两侧={report.tauberian_both_sides}, Calderón 有限={report.calderon_finite}"
    )
    return report
