"""
对偶小波 μ

μ̂(ω) = conj(ψ̂(ω))·λ(ω) / D(ω)，D(ω) = Σ_j |ψ̂(b^jω)|² λ(b^jω)
λ 紧支撑于 (a, c)，因此 ω ∈ supp λ 时只有 |j| ≤ J = ceil(log_b(c/a)) 的项非零。
"""

import math
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..Admissibility import Side, spectrum_sup
from ..common.config import CLI_CONFIG, DUAL_FRAME_CONFIG
from ..common.errors import DegenerateDenominator, ValidationError
from ..Wavelets import WaveletSpec, eval_spectrum
from .cover import AnnularBump, CoverResult, find_cover, make_bump

JRange = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class DualWavelet:
    """
    对偶小波，频谱按公式惰性求值

    Attributes:
        base_b: 几何底 b > 1
        bump: 环形凸起 λ
        source: 构造所用的小波 ψ
        delta: 分母下界 δ
        cover: 产生 λ 的覆盖结果（直接传入 λ 时为空）
    """

    base_b: float
    bump: AnnularBump
    source: WaveletSpec
    delta: float = 0.0
    cover: Optional[CoverResult] = None

    @property
    def j_reach(self) -> int:
        return int(math.ceil(self.bump.log_span / math.log(self.base_b)))

    def denominator(self, omega) -> np.ndarray:
        """D(ω)，对 ω ∈ supp λ 精确；求和顺序固定为 j = −J..J"""
        omega = np.asarray(omega, dtype=float)
        total = np.zeros(omega.shape)
        for j in range(-self.j_reach, self.j_reach + 1):
            scaled = self.base_b ** j * omega
            total = total + np.abs(eval_spectrum(self.source, scaled)) ** 2 * self.bump(scaled)
        return total

    def spectrum_eval(self, omega) -> np.ndarray:
        """μ̂(ω)，λ(ω) = 0 处为 0"""
        omega = np.asarray(omega, dtype=float)
        lam = self.bump(omega)
        inside = lam > 0
        denominator = np.where(inside, self.denominator(np.where(inside, omega, 0.0)), 1.0)
        numerator = np.conj(eval_spectrum(self.source, omega)) * lam
        return np.where(inside, numerator / denominator, 0.0 + 0.0j)

    def contributing_indices(self, omega: float) -> List[int]:
        """使 b^jω ∈ supp λ 的全部 j"""
        if omega == 0:
            return []
        candidates = []
        for a, c in self.bump.intervals:
            lo = math.floor(math.log(a / abs(omega), self.base_b)) - 1
            hi = math.ceil(math.log(c / abs(omega), self.base_b)) + 1
            candidates.extend(range(lo, hi + 1))
        return sorted(j for j in set(candidates) if self.bump(self.base_b ** j * omega) > 0)

    def to_dict(self) -> Dict[str, object]:
        data = {
            "source": self.source.name,
            "base": self.base_b,
            "delta": self.delta,
            "intervals": {side.label: self.bump.interval(side) for side in Side if self.bump.interval(side)},
        }
        if self.cover is not None:
            data["cover"] = self.cover.to_dict()
        return data


def _period_probes(interval: Tuple[float, float], b: float, n: int) -> np.ndarray:
    """(a, c) 内以几何中点为中心的一个伸缩周期 [m/√b, m√b]"""
    a, c = interval
    center = math.sqrt(a * c)
    return center * b ** np.linspace(-0.5, 0.5, n)


def build_dual(psi: WaveletSpec, bump: AnnularBump, b: float, cover: Optional[CoverResult] = None) -> DualWavelet:
    """
    构造对偶小波，并在每侧一个伸缩周期内检查分母正性

    D(bω) = D(ω)，所以一个周期内的检查覆盖该侧全部 ω ≠ 0。

    Raises:
        ValidationError: b ≤ 1
        DegenerateDenominator: 某个探测点上 D(ω) < δ
    """
    if not b > 1:
        raise ValidationError(f"几何底 b 必须大于 1，实际 {b}")
    delta = DUAL_FRAME_CONFIG["degeneracy_factor"] * spectrum_sup(psi) ** 2
    dual = DualWavelet(float(b), bump, psi, delta, cover)

    for side in Side:
        interval = bump.interval(side)
        if interval is None:
            logger.info(f"λ 在侧 {side.label} 上为空，对偶只服务另一侧")
            continue
        probes = int(side) * _period_probes(interval, b, DUAL_FRAME_CONFIG["positivity_probes"])
        values = dual.denominator(probes)
        worst = int(np.argmin(values))
        if not values[worst] >= delta or delta == 0.0:
            raise DegenerateDenominator(
                f"分母在 ω={probes[worst]:.6g} 处为 {values[worst]:.3e}，低于 δ={delta:.3e}",
                details={"omega": float(probes[worst]), "denominator": float(values[worst]), "delta": delta},
            )

    logger.info(f"对偶小波构造完成: {psi.name}, b={b:.6g}, J={dual.j_reach}, δ={delta:.3e}")
    return dual


def auto_j_range(mu: DualWavelet, band: Sequence[float]) -> JRange:
    """
    覆盖 |ω| ∈ [ω_lo, ω_hi] 所需的最小 j 区间

    Raises:
        ValidationError: 频带不满足 0 < ω_lo ≤ ω_hi
    """
    low, high = float(band[0]), float(band[1])
    if not 0 < low <= high:
        raise ValidationError(f"频带须满足 0 < ω_lo ≤ ω_hi，实际 [{low}, {high}]")
    a_min = min(a for a, _ in mu.bump.intervals)
    c_max = max(c for _, c in mu.bump.intervals)
    j_min = math.floor(math.log(a_min / high, mu.base_b))
    j_max = math.ceil(math.log(c_max / low, mu.base_b))
    return j_min, j_max


def frame_multiplier(mu: DualWavelet, omega, j_range: JRange,
                     analysis: Optional[Callable[[np.ndarray], np.ndarray]] = None) -> np.ndarray:
    """
    m(ω) = Σ_{j ∈ j_range} κ̂(b^jω)·μ̂(b^jω)，κ̂ 默认取 μ 的源小波频谱
    """
    omega = np.asarray(omega, dtype=float)
    analysis = analysis or partial(eval_spectrum, mu.source)
    total = np.zeros(omega.shape, dtype=np.complex128)
    for j in range(j_range[0], j_range[1] + 1):
        scaled = mu.base_b ** j * omega
        total = total + analysis(scaled) * mu.spectrum_eval(scaled)
    return total


def partition_check(psi: WaveletSpec, mu: DualWavelet, band: Optional[Sequence[float]] = None,
                    n_probe: Optional[int] = None) -> float:
    """
    max |Σ_j ψ̂(b^jω)μ̂(b^jω) − 1|，两侧各取 n_probe 个对数均匀探测点
    """
    band = band or CLI_CONFIG["partition_band"]
    n_probe = n_probe or CLI_CONFIG["partition_probes"]
    low, high = float(band[0]), float(band[1])
    if not 0 < low < high:
        raise ValidationError(f"频带须满足 0 < ω_lo < ω_hi，实际 [{low}, {high}]")
    probes = np.geomspace(low, high, n_probe)
    omega = np.concatenate([probes, -probes])
    j_range = auto_j_range(mu, (low, high))

    deviation = float(np.max(np.abs(frame_multiplier(mu, omega, j_range, partial(eval_spectrum, psi)) - 1.0)))
    logger.info(f"单位分解检查 {psi.name}: 频带 [{low:g}, {high:g}]，最大偏差 {deviation:.3e}")
    return deviation


def build_dual_for(psi: WaveletSpec, tau: Optional[float] = None, b_min: Optional[float] = None,
                   margin: Optional[float] = None, sides: Iterable[Side] = tuple(Side),
                   b_max: Optional[float] = None) -> DualWavelet:
    """
    find_cover（逐侧）→ make_bump → build_dual，使用各侧比值的最小值作为共同底

    b_max 缺省取 DUAL_FRAME_CONFIG["b_max"]，即覆盖比值不取满足阈值的最大可能值；
    需要更大的底时显式传入。

    Raises:
        TauberianFail: 某一侧找不到覆盖区间
        DegenerateDenominator: 分母退化
    """
    covers = {side: find_cover(psi, side, tau, b_min, b_max) for side in sides}
    cover = CoverResult(covers.get(Side.POSITIVE), covers.get(Side.NEGATIVE))
    bump = make_bump(cover, margin)
    return build_dual(psi, bump, cover.base, cover)
