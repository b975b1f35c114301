# test_zoo.py：Wavelets 组件测试
# ✔ 各种类的时域约定与闭式频谱
# ✔ 闭式频谱与细采样 FFT 的一致性
# ✔ 伸缩平移的频谱关系、L² 范数与群律

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate

from WaveletUniqueness.common.config import WAVELET_CONFIG
from WaveletUniqueness.common.errors import ValidationError
from WaveletUniqueness.Spectral import SampledSignal, UniformGrid, forward_ft
from WaveletUniqueness.Wavelets import (
    as_wavelet,
    conjugate,
    dilate_translate,
    eval_spectrum,
    fine_sampling,
    list_wavelets,
    make_wavelet,
    spectrum_family,
)

CLOSED_FORM_KINDS = [
    ("gaussian", {}),
    ("gaussian_derivative", {"order": 1}),
    ("gaussian_derivative", {"order": 3}),
    ("mexican_hat", {}),
    ("poisson", {}),
    ("poisson_derivative", {}),
]


# --------------------------------------------------
# 时域约定
# --------------------------------------------------
def test_mexican_hat_unit_peak():
    psi = make_wavelet("mexican_hat")
    assert psi(0.0) == pytest.approx(1.0)
    assert psi(1.0) == pytest.approx(0.0, abs=1e-15)


def test_mexican_alias_and_negated_second_derivative():
    mexican = make_wavelet("mexican")
    second = make_wavelet("gaussian_derivative", {"order": 2})
    x = np.linspace(-5, 5, 101)
    assert_allclose(mexican(x), -second(x), atol=1e-14)


def test_haar_values():
    psi = make_wavelet("haar")
    assert_allclose(psi([-0.1, 0.0, 0.25, 0.5, 0.75, 1.0]), [0, 1, 1, -1, -1, 0])


def test_poisson_derivative_is_derivative():
    poisson = make_wavelet("poisson")
    derivative = make_wavelet("poisson_derivative")
    x = np.linspace(-3, 3, 13)
    h = 1e-5
    numeric = (poisson(x + h) - poisson(x - h)) / (2 * h)
    assert_allclose(derivative(x), numeric, atol=1e-8)


# --------------------------------------------------
# 频谱
# --------------------------------------------------
def test_spectrum_special_values():
    assert eval_spectrum(make_wavelet("gaussian"), 0.0) == pytest.approx(1.0)
    assert eval_spectrum(make_wavelet("mexican_hat"), 0.0) == 0.0
    expected = 4 * np.pi ** 2 * np.sqrt(2 * np.pi) * np.exp(-2 * np.pi ** 2)
    assert eval_spectrum(make_wavelet("mexican_hat"), 1.0).real == pytest.approx(expected, rel=1e-12)


def test_mexican_hat_spectrum_matches_quadrature():
    psi = make_wavelet("mexican_hat")
    value, _ = integrate.quad(lambda x: psi(x) * np.cos(2 * np.pi * x), -12, 12, limit=200, epsabs=1e-14)
    assert eval_spectrum(psi, 1.0).real == pytest.approx(value, abs=1e-12)


def test_poisson_spectra():
    omega = np.array([-2.0, -0.5, 0.0, 0.3, 1.7])
    assert_allclose(eval_spectrum(make_wavelet("poisson"), omega), np.exp(-2 * np.pi * np.abs(omega)))
    derivative = eval_spectrum(make_wavelet("poisson_derivative"), omega)
    assert_allclose(np.abs(derivative), 2 * np.pi * np.abs(omega) * np.exp(-2 * np.pi * np.abs(omega)))
    # 约定下保留因子 i
    assert_allclose(derivative.real, 0.0, atol=1e-15)


@pytest.mark.parametrize("kind,params", CLOSED_FORM_KINDS)
def test_closed_form_matches_fine_sampling(kind, params):
    psi = make_wavelet(kind, params)
    spectrum = forward_ft(fine_sampling(psi))
    mask = np.abs(spectrum.frequencies) <= 4.0
    tolerance = WAVELET_CONFIG["spectrum_tolerance"][spectrum_family(psi)]
    error = np.max(np.abs(spectrum.values[mask] - eval_spectrum(psi, spectrum.frequencies[mask])))
    assert error <= tolerance


def test_haar_closed_form_matches_fine_sampling():
    psi = make_wavelet("haar")
    spectrum = forward_ft(fine_sampling(psi))
    mask = np.abs(spectrum.frequencies) <= 4.0
    error = np.max(np.abs(spectrum.values[mask] - eval_spectrum(psi, spectrum.frequencies[mask])))
    assert error <= 1e-2


def test_mexican_hat_spectrum_positive_away_from_origin():
    freqs = UniformGrid(x0=-16.0, dx=1.0 / 8, n=256).spectral_grid().frequencies
    values = eval_spectrum(make_wavelet("mexican_hat"), freqs)
    assert np.all(values.imag == 0)
    assert np.all(values.real[freqs != 0] > 0)
    assert values.real[freqs == 0] == 0


def test_sampled_wavelet_interpolates_cached_spectrum():
    mexican = make_wavelet("mexican_hat")
    sampled = make_wavelet("sampled", {"signal": fine_sampling(mexican)})
    assert sampled.spectrum_eval is None and sampled.has_spectrum
    omega = np.linspace(-3.0, 3.0, 257) + 1.0 / 300
    assert_allclose(eval_spectrum(sampled, omega), eval_spectrum(mexican, omega), atol=1e-5)
    assert eval_spectrum(sampled, 1e6) == 0


# --------------------------------------------------
# 伸缩平移
# --------------------------------------------------
def test_identity_dilation():
    psi = make_wavelet("mexican_hat")
    x = np.linspace(-4, 4, 33)
    assert_allclose(dilate_translate(psi, 1.0, 0.0)(x), psi(x), rtol=0, atol=0)


def test_dilated_spectrum_matches_fft():
    psi = make_wavelet("mexican_hat")
    dilated = dilate_translate(psi, 2.0, 0.7)
    grid = UniformGrid(x0=-32.0, dx=64.0 / 2 ** 14, n=2 ** 14)
    spectrum = forward_ft(SampledSignal(grid, dilated(grid.points)))
    error = np.max(np.abs(spectrum.values - dilated.spectrum(spectrum.frequencies)))
    assert error <= 1e-8


@pytest.mark.parametrize("s,t", [(0.5, -1.0), (2.0, 0.7), (3.0, 2.5)])
def test_l2_norm_preserved(s, t):
    psi = make_wavelet("mexican_hat")
    dilated = dilate_translate(psi, s, t)
    base, _ = integrate.quad(lambda x: psi(x) ** 2, -20, 20, limit=200)
    moved, _ = integrate.quad(lambda x: dilated(x) ** 2, t - 20 * s, t + 20 * s, limit=200)
    assert moved == pytest.approx(base, rel=1e-10)


def test_group_law():
    psi = make_wavelet("gaussian_derivative", {"order": 2})
    x = np.linspace(-10, 10, 201)
    nested = dilate_translate(dilate_translate(psi, 1.5, 0.0), 0.75, 0.0)
    direct = dilate_translate(psi, 1.5 * 0.75, 0.0)
    assert np.max(np.abs(nested(x) - direct(x))) <= 1e-12


def test_dilate_rejects_nonpositive_scale():
    with pytest.raises(ValidationError):
        dilate_translate(make_wavelet("haar"), 0.0, 1.0)


# --------------------------------------------------
# 构造错误与辅助函数
# --------------------------------------------------
def test_make_wavelet_errors():
    with pytest.raises(ValidationError):
        make_wavelet("morlet")
    with pytest.raises(ValidationError):
        make_wavelet("gaussian_derivative", {"order": 0})
    with pytest.raises(ValidationError):
        make_wavelet("sampled", {})


def test_spectrum_requires_closed_form_or_samples():
    custom = as_wavelet(lambda x: np.exp(-x ** 2))
    with pytest.raises(ValidationError):
        eval_spectrum(custom, 1.0)


def test_conjugate_of_complex_wavelet():
    grid = UniformGrid(x0=-32.0, dx=1.0 / 16, n=1024)
    signal = SampledSignal(grid, np.exp(2j * np.pi * grid.points) * np.exp(-np.pi * grid.points ** 2))
    psi = make_wavelet("sampled", {"signal": signal})
    phi = conjugate(psi)
    assert_allclose(phi(0.3), np.conj(psi(0.3)))
    assert_allclose(eval_spectrum(phi, 1.0), np.conj(eval_spectrum(psi, -1.0)))
    real = make_wavelet("mexican_hat")
    assert conjugate(real) is real


def test_registry_lists_every_kind():
    names = [entry["name"] for entry in list_wavelets()]
    assert names[:6] == ["gaussian", "gaussian_derivative", "mexican_hat", "poisson", "poisson_derivative", "haar"]
    assert "sampled" in names
