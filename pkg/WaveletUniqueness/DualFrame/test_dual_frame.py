# test_dual_frame.py：DualFrame 组件测试
# ✔ 覆盖区间搜索与失败情形
# ✔ 环形凸起的支撑、峰值与光滑性
# ✔ 对偶小波、单位分解与有限和性质
# ✔ 频域 / 时域重构与配对恒等式

import math

import numpy as np
import pytest

from WaveletUniqueness.Admissibility import Side, spectrum_sup
from WaveletUniqueness.common.errors import BandCoverage, DegenerateDenominator, TauberianFail, ValidationError
from WaveletUniqueness.common.utils import relative_l2_error
from WaveletUniqueness.DualFrame import (
    AnnularBump,
    CoverResult,
    ReconstructionMode,
    auto_j_range,
    build_dual,
    build_dual_for,
    find_cover,
    make_bump,
    partition_check,
    reconstruct,
    reproducing_pairing,
)
from WaveletUniqueness.Spectral import SampledSignal, UniformGrid, make_test_function
from WaveletUniqueness.Wavelets import conjugate, eval_spectrum, fine_sampling, make_wavelet

BAND_GRID = UniformGrid(x0=-64.0, dx=1.0 / 16, n=2048)

ZOO = [
    ("gaussian", {}),
    ("gaussian_derivative", {"order": 1}),
    ("gaussian_derivative", {"order": 3}),
    ("mexican_hat", {}),
    ("poisson", {}),
    ("poisson_derivative", {}),
    ("haar", {}),
]


@pytest.fixture(scope="module")
def mexican():
    return make_wavelet("mexican_hat")


@pytest.fixture(scope="module")
def mexican_dual(mexican):
    return build_dual_for(mexican)


@pytest.fixture(scope="module")
def band_signal():
    return make_test_function([1.0, 2.0], True, BAND_GRID)


# --------------------------------------------------
# 覆盖区间
# --------------------------------------------------
def test_cover_for_mexican_hat(mexican):
    tau = 0.1 * spectrum_sup(mexican)
    cover = find_cover(mexican, Side.POSITIVE, tau, b_min=2.0)
    assert cover.b >= 2.0
    assert cover.floor >= tau
    probes = cover.r * np.geomspace(1.0, cover.b, 200)
    assert np.all(np.abs(eval_spectrum(mexican, probes)) >= tau * (1 - 1e-3))


def test_cover_ratio_is_capped_at_b_max(mexican):
    # mexican_hat 在 0.1·sup 以上的段跨越约 11 倍频率
    assert find_cover(mexican, Side.POSITIVE).b == 2.0
    wide = find_cover(mexican, Side.POSITIVE, b_max=4.0)
    assert wide.b == 4.0
    assert wide.floor >= wide.tau

    dual = build_dual_for(mexican, b_max=4.0)
    assert dual.base_b == 4.0
    assert partition_check(mexican, dual, (1e-3, 1e3), 512) <= 1e-10


def test_zero_wavelet_has_no_cover():
    zero = make_wavelet("custom", {"time_eval": lambda x: 0.0 * x, "spectrum_eval": lambda w: np.zeros_like(w)})
    with pytest.raises(TauberianFail):
        find_cover(zero, Side.POSITIVE)


def test_narrow_support_cannot_reach_large_ratio():
    psi = make_wavelet("sampled", {"signal": make_test_function([1.0, 2.0], False, BAND_GRID, side=1)})
    with pytest.raises(TauberianFail):
        find_cover(psi, Side.POSITIVE, 1e-6, b_min=4.0)
    with pytest.raises(TauberianFail):
        build_dual_for(psi)


# --------------------------------------------------
# 环形凸起
# --------------------------------------------------
def test_bump_support_and_midpoint(mexican):
    cover = CoverResult(find_cover(mexican, Side.POSITIVE), find_cover(mexican, Side.NEGATIVE))
    bump = make_bump(cover)
    a, c = bump.positive
    side_cover = cover.positive
    assert a == pytest.approx(side_cover.r * 0.95)
    assert c == pytest.approx(side_cover.b * side_cover.r * 1.05)
    assert np.all(bump([0.0, a, c, 0.5 * a, 2 * c]) == 0)
    assert np.all(bump(np.geomspace(side_cover.r, side_cover.b * side_cover.r, 64)) > 0)
    assert bump.unnormalized(0.5 * (a + c)) == pytest.approx(math.exp(-4.0), rel=1e-12)
    assert bump(0.5 * (a + c)) == pytest.approx(1.0, rel=1e-12)


def test_bump_is_flat_at_the_edge():
    bump = AnnularBump(positive=(1.0, 3.0))
    a, c = bump.positive
    h = 1e-3 * (c - a)
    samples = bump(a + h * np.arange(7))
    sixth = np.sum([(-1) ** (6 - k) * math.comb(6, k) * samples[k] for k in range(7)]) / h ** 6
    assert abs(sixth) <= 1e-6


def test_bump_validation(mexican):
    cover = CoverResult(find_cover(mexican, Side.POSITIVE))
    with pytest.raises(ValidationError):
        make_bump(cover, margin=0.5)
    with pytest.raises(ValidationError):
        AnnularBump(positive=(2.0, 1.0))


# --------------------------------------------------
# 对偶小波
# --------------------------------------------------
def test_dual_vanishes_outside_bump(mexican_dual):
    a, c = mexican_dual.bump.positive
    outside = np.array([0.0, 0.5 * a, a, c, 3 * c, -0.5 * a])
    assert np.all(mexican_dual.spectrum_eval(outside) == 0)


def test_single_term_point_inverts_spectrum(mexican, mexican_dual):
    a, c = mexican_dual.bump.positive
    b = mexican_dual.base_b
    assert c / b < 0.5 * (c / b + a * b) < a * b
    omega = 0.5 * (c / b + a * b)
    assert mexican_dual.contributing_indices(omega) == [0]
    product = eval_spectrum(mexican, omega) * mexican_dual.spectrum_eval(omega)
    assert abs(product - 1.0) <= 1e-14


def test_contributing_terms_are_finite(mexican_dual):
    b = mexican_dual.base_b
    for side in Side:
        a, c = mexican_dual.bump.interval(side)
        limit = math.ceil(math.log(c / a, b)) + 1
        for omega in int(side) * np.geomspace(1e-3, 1e3, 97):
            assert len(mexican_dual.contributing_indices(omega)) <= limit


@pytest.mark.parametrize("kind,params", ZOO)
def test_partition_of_unity_closed_form(kind, params):
    psi = make_wavelet(kind, params)
    dual = build_dual_for(psi)
    assert partition_check(psi, dual, (1e-3, 1e3), 512) <= 1e-10


def test_partition_of_unity_sampled_spectrum(mexican):
    sampled = make_wavelet("sampled", {"signal": fine_sampling(mexican)})
    dual = build_dual_for(sampled)
    assert partition_check(sampled, dual, (1e-3, 1e3), 512) <= 1e-6


def test_degenerate_denominator_is_reported(mexican):
    with pytest.raises(DegenerateDenominator) as excinfo:
        build_dual(mexican, AnnularBump(positive=(50.0, 120.0), negative=(50.0, 120.0)), 2.0)
    assert "omega" in excinfo.value.details

    bump = make_bump(CoverResult(find_cover(mexican, Side.POSITIVE), find_cover(mexican, Side.NEGATIVE)))
    with pytest.raises(DegenerateDenominator):
        build_dual(mexican, bump, 4.0)


def test_auto_j_range_covers_band(mexican_dual):
    j_min, j_max = auto_j_range(mexican_dual, (1.0, 2.0))
    b = mexican_dual.base_b
    a, c = mexican_dual.bump.positive
    assert b ** j_min * 2.0 <= a
    assert b ** j_max * 1.0 >= c
    with pytest.raises(ValidationError):
        auto_j_range(mexican_dual, (0.0, 1.0))


# --------------------------------------------------
# 重构
# --------------------------------------------------
def test_spectral_reconstruction(mexican, mexican_dual, band_signal):
    rebuilt = reconstruct(band_signal, mexican, mexican_dual)
    assert not rebuilt.is_complex
    assert relative_l2_error(rebuilt.values, band_signal.values) <= 1e-6


def test_temporal_reconstruction_agrees(mexican, mexican_dual, band_signal):
    spectral = reconstruct(band_signal, mexican, mexican_dual, mode=ReconstructionMode.SPECTRAL)
    temporal = reconstruct(band_signal, mexican, mexican_dual, mode="temporal")
    assert relative_l2_error(temporal.values, band_signal.values) <= 1e-3
    assert relative_l2_error(temporal.values, spectral.values) <= 1e-3


def test_reconstruction_is_linear(mexican, mexican_dual, band_signal):
    alpha = 3.7
    once = reconstruct(band_signal, mexican, mexican_dual)
    scaled = reconstruct(band_signal.scaled(alpha), mexican, mexican_dual)
    assert np.max(np.abs(scaled.values - alpha * once.values)) <= 1e-12


def test_nonzero_mean_is_not_covered(mexican, mexican_dual):
    g = SampledSignal(BAND_GRID, np.exp(-np.pi * BAND_GRID.points ** 2))
    with pytest.raises(BandCoverage):
        reconstruct(g, mexican, mexican_dual)


def test_short_j_range_is_not_covered(mexican, mexican_dual, band_signal):
    j_min, j_max = auto_j_range(mexican_dual, (1.0, 2.0))
    with pytest.raises(BandCoverage) as excinfo:
        reconstruct(band_signal, mexican, mexican_dual, j_range=(j_min, j_min + 1))
    assert excinfo.value.details["frequencies"]


# --------------------------------------------------
# 配对恒等式
# --------------------------------------------------
def test_pairing_matches_direct_integral(mexican, mexican_dual, band_signal):
    x = BAND_GRID.points
    f = SampledSignal(BAND_GRID, np.exp(-np.pi * (x / 3) ** 2) * np.cos(2 * np.pi * 1.4 * x))
    result = reproducing_pairing(f, band_signal, mexican, mexican_dual)
    scale = np.linalg.norm(f.values) * np.linalg.norm(band_signal.values) * BAND_GRID.dx
    assert result.covered
    assert abs(result.pairing - result.direct) <= 1e-8 * scale
    assert abs(result.pairing) <= result.max_coefficient * result.bound * (1 + 1e-12)


def test_vanishing_transform_forces_vanishing_pairing():
    psi = make_wavelet("sampled", {"signal": make_test_function([1.0, 2.0], False, BAND_GRID, side=-1)})
    dual = build_dual_for(conjugate(psi), sides=(Side.POSITIVE,))
    f = make_test_function([1.0, 2.0], False, BAND_GRID, side=1)
    g = make_test_function([1.0, 2.0], False, BAND_GRID, side=1)

    result = reproducing_pairing(f, g, psi, dual)
    assert result.covered
    assert result.max_coefficient <= 1e-10
    assert abs(result.pairing) <= result.max_coefficient * result.bound + 1e-15
    assert abs(result.direct) <= 1e-10
