"""
覆盖区间搜索与环形凸起 λ

每一侧在径向扫描网格上找一段 [r, br]，使 |ψ̂| 在其上不低于阈值 τ；
λ 在 (r(1−ε), br(1+ε)) 上为光滑凸起，其余处为 0。
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
from loguru import logger

from ..Admissibility import Side, as_side, scan_cells, spectrum_sup
from ..common.config import ADMISSIBILITY_CONFIG, DUAL_FRAME_CONFIG
from ..common.errors import TauberianFail, ValidationError
from ..Spectral import bump_profile
from ..Wavelets import WaveletSpec, eval_spectrum


@dataclass(frozen=True)
class SideCover:
    """
    单侧覆盖区间 [r, br]

    Attributes:
        side: 方向
        r: 区间左端 > 0
        b: 区间比值 > 1
        floor: 扫描网格上 |ψ̂| 在区间内的最小值
        tau: 搜索时使用的阈值
    """

    side: Side
    r: float
    b: float
    floor: float
    tau: float

    def to_dict(self) -> Dict[str, float]:
        return {"side": self.side.label, "r": self.r, "b": self.b, "floor": self.floor, "tau": self.tau}


@dataclass(frozen=True)
class CoverResult:
    positive: Optional[SideCover] = None
    negative: Optional[SideCover] = None

    def __post_init__(self):
        if self.positive is None and self.negative is None:
            raise ValidationError("覆盖结果至少需要一侧")

    @property
    def sides(self) -> Tuple[SideCover, ...]:
        return tuple(c for c in (self.positive, self.negative) if c is not None)

    @property
    def base(self) -> float:
        """两侧共用的底 b = min(b_+, b_−)"""
        return min(c.b for c in self.sides)

    def to_dict(self) -> Dict[str, object]:
        return {"base": self.base, "sides": [c.to_dict() for c in self.sides]}


def find_cover(psi: WaveletSpec, side: Side, tau: Optional[float] = None,
               b_min: Optional[float] = None, b_max: Optional[float] = None) -> SideCover:
    """
    在对数扫描网格上滑窗寻找 |ψ̂(σr)| ≥ τ 的区间 [r, br]

    b 取连续满足阈值的最长段所能达到的比值，但不超过 b_max（缺省 2）；
    因此 b 并非满足阈值的最大比值。段长超过上限时，在段内选取最小值最大的窗口。

    Args:
        psi: 小波
        side: 方向
        tau: 阈值，默认 0.1·sup|ψ̂|
        b_min: 比值下限，默认 2^{1/8}
        b_max: 比值上限，默认 2

    Raises:
        TauberianFail: 不存在比值 ≥ b_min 的区间
    """
    side = as_side(side)
    b_min = b_min or DUAL_FRAME_CONFIG["b_min"]
    b_max = max(b_max or DUAL_FRAME_CONFIG["b_max"], b_min)
    if not b_min > 1:
        raise ValidationError(f"b_min 必须大于 1，实际 {b_min}")
    if tau is None:
        tau = DUAL_FRAME_CONFIG["cover_relative_threshold"] * spectrum_sup(psi)

    radii, _ = scan_cells()
    magnitude = np.abs(eval_spectrum(psi, int(side) * radii))
    good = (magnitude >= tau) & (magnitude > 0)

    # 最长的连续满足段
    best_start, best_stop, start = -1, -1, None
    for i, flag in enumerate(np.append(good, False)):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            if best_start < 0 or i - 1 - start > best_stop - best_start:
                best_start, best_stop = start, i - 1
            start = None

    ppo = ADMISSIBILITY_CONFIG["points_per_octave"]
    ratio = 0.0 if best_start < 0 else 2.0 ** ((best_stop - best_start) / ppo)
    if ratio < b_min:
        raise TauberianFail(
            f"{psi.name} 侧 {side.label} 在阈值 τ={tau:.3e} 下找不到比值 ≥ {b_min:.6g} 的区间",
            details={"side": side.label, "tau": tau, "best_ratio": ratio},
        )

    width = int(np.floor(ppo * np.log2(b_max) + 1e-9))
    run = magnitude[best_start:best_stop + 1]
    if len(run) - 1 <= width:
        lo, hi = best_start, best_stop
    else:
        floors = np.array([run[k:k + width + 1].min() for k in range(len(run) - width)])
        lo = best_start + int(np.argmax(floors))
        hi = lo + width

    cover = SideCover(side, float(radii[lo]), float(2.0 ** ((hi - lo) / ppo)),
                      float(magnitude[lo:hi + 1].min()), float(tau))
    logger.info(f"覆盖区间 {psi.name} 侧 {side.label}: r={cover.r:.6g}, b={cover.b:.6g}, floor={cover.floor:.3e}")
    return cover


@dataclass(frozen=True)
class AnnularBump:
    """
    分侧环形凸起 λ：在 σω ∈ (a_σ, c_σ) 上为 exp(4 − 1/(u(1−u)))，u = (|ω|−a)/(c−a)，峰值 1

    Attributes:
        positive: 正侧区间 (a, c)，可为空
        negative: 负侧区间 (a, c)，可为空
    """

    positive: Optional[Tuple[float, float]] = None
    negative: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        for interval in (self.positive, self.negative):
            if interval is not None and not 0 < interval[0] < interval[1]:
                raise ValidationError(f"凸起区间须满足 0 < a < c，实际 {interval}")

    def interval(self, side: Side) -> Optional[Tuple[float, float]]:
        return self.positive if as_side(side) is Side.POSITIVE else self.negative

    @property
    def intervals(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(i for i in (self.positive, self.negative) if i is not None)

    def __call__(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        values = np.zeros(omega.shape)
        for side in Side:
            interval = self.interval(side)
            if interval is None:
                continue
            a, c = interval
            q = int(side) * omega
            values = values + bump_profile((q - a) / (c - a), 0.0, 1.0)
        return values

    def unnormalized(self, omega) -> np.ndarray:
        """峰值归一化之前的轮廓 exp(−1/(u(1−u)))"""
        return self(omega) * np.exp(-4.0)

    @property
    def log_span(self) -> float:
        """max ln(c/a)"""
        return max(np.log(c / a) for a, c in self.intervals)


def make_bump(cover: CoverResult, margin: Optional[float] = None) -> AnnularBump:
    """
    按覆盖区间构造 λ，(a, c) = (r(1−ε), br(1+ε))

    Raises:
        ValidationError: ε 不在 (0, 1/2) 内
    """
    margin = DUAL_FRAME_CONFIG["margin"] if margin is None else margin
    if not 0 < margin < 0.5:
        raise ValidationError(f"安全边 ε 必须在 (0, 1/2) 内，实际 {margin}")
    intervals = {}
    for side_cover in cover.sides:
        intervals[side_cover.side] = (side_cover.r * (1 - margin), side_cover.b * side_cover.r * (1 + margin))
    return AnnularBump(intervals.get(Side.POSITIVE), intervals.get(Side.NEGATIVE))
