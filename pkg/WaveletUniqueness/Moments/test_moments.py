# test_moments.py：Moments 组件测试
# ✔ 闭式矩与消失矩阶数
# ✔ 二项式配对与直接求积一致
# ✔ 由配对采样逐级恢复矩

import math

import numpy as np
import pytest

from WaveletUniqueness.common.errors import DegenerateLeadingCoefficient, ValidationError
from WaveletUniqueness.Moments import (
    MomentVector,
    PolynomialSignal,
    moment,
    moment_recovery,
    moment_vector,
    polynomial_pairing,
    vanishing_moment_order,
)
from WaveletUniqueness.Transform import cwt_single
from WaveletUniqueness.Wavelets import make_wavelet

SQRT_2PI = math.sqrt(2 * math.pi)
SCALES = (0.5, 1.0, 2.0)
SHIFTS = (-1.0, 0.0, 1.0)

# (种类, 参数, 可用的最高多项式次数)
RECOVERABLE = [
    ("gaussian", {}, 4),
    ("gaussian_derivative", {"order": 1}, 4),
    ("gaussian_derivative", {"order": 3}, 4),
    ("mexican_hat", {}, 4),
    ("poisson", {}, 0),
    ("poisson_derivative", {}, 1),
    ("haar", {}, 4),
]


@pytest.fixture(scope="module")
def mexican():
    return make_wavelet("mexican_hat")


@pytest.fixture(scope="module")
def haar():
    return make_wavelet("haar")


# --------------------------------------------------
# 多项式信号
# --------------------------------------------------
def test_polynomial_trims_trailing_zeros():
    f = PolynomialSignal((1.0, 2.0, 0.0, 0.0))
    assert f.coeffs == (1.0, 2.0)
    assert f.degree == 1
    assert f(np.array([0.0, 1.0, -2.0])).tolist() == [1.0, 3.0, -3.0]
    assert PolynomialSignal((0.0, 0.0)).is_zero
    assert PolynomialSignal.monomial(3).coeffs == (0.0, 0.0, 0.0, 1.0)


def test_polynomial_rejects_nonfinite():
    with pytest.raises(ValidationError):
        PolynomialSignal((1.0, float("nan")))
    with pytest.raises(ValidationError):
        PolynomialSignal(())


# --------------------------------------------------
# 矩
# --------------------------------------------------
def test_mexican_hat_moments(mexican):
    assert abs(moment(mexican, 0)) <= 1e-10
    assert abs(moment(mexican, 1)) <= 1e-10
    assert moment(mexican, 2) == pytest.approx(-2 * SQRT_2PI, abs=1e-6)


def test_haar_first_moment(haar):
    assert abs(moment(haar, 0)) <= 1e-12
    assert abs(moment(haar, 1) + 0.25) <= 1e-12


def test_poisson_moments_need_decay():
    poisson = make_wavelet("poisson")
    assert moment(poisson, 0) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(ValidationError):
        moment(poisson, 1)
    assert moment(make_wavelet("poisson_derivative"), 1) == pytest.approx(-1.0, abs=1e-8)


def test_moment_vector_carries_error_bounds(mexican):
    moments = moment_vector(mexican, 2)
    assert isinstance(moments, MomentVector)
    assert moments.order == 2
    assert np.all(moments.errors >= 0)
    assert np.all(moments.errors <= 1e-8)
    assert [entry["order"] for entry in moments.to_dict()] == [0, 1, 2]
    with pytest.raises(ValueError):
        moments.values[0] = 1.0


def test_complex_wavelet_moment_and_conjugated_pairing(mexican):
    rotated = make_wavelet("custom", {
        "time_eval": lambda x: 1j * mexican(x),
        "support": mexican.support,
        "decay_order": math.inf,
    })
    assert moment(rotated, 2) == pytest.approx(-2j * SQRT_2PI, abs=1e-6)
    pairing = polynomial_pairing(PolynomialSignal.monomial(2), rotated, 1.0, 0.0)
    assert pairing == pytest.approx(2j * SQRT_2PI, abs=1e-6)


@pytest.mark.parametrize("kind,params,expected", [
    ("mexican_hat", {}, 2),
    ("haar", {}, 1),
    ("gaussian", {}, 0),
    ("gaussian_derivative", {"order": 3}, 3),
])
def test_vanishing_moment_order(kind, params, expected):
    assert vanishing_moment_order(make_wavelet(kind, params), 1e-8, 4) == expected


def test_vanishing_moment_order_validates_decay():
    with pytest.raises(ValidationError):
        vanishing_moment_order(make_wavelet("poisson"), 1e-8, 4)
    with pytest.raises(ValidationError):
        vanishing_moment_order(make_wavelet("haar"), 0.0, 2)


# --------------------------------------------------
# 多项式配对
# --------------------------------------------------
def test_linear_signal_is_annihilated_by_mexican_hat(mexican):
    f = PolynomialSignal((0.0, 1.0))
    for s in SCALES:
        for t in SHIFTS:
            assert abs(polynomial_pairing(f, mexican, s, t)) <= 1e-9


def test_linear_signal_against_haar(haar):
    f = PolynomialSignal((0.0, 1.0))
    exact = polynomial_pairing(f, haar, 1.0, 0.0)
    assert abs(exact + 0.25) <= 1e-12
    assert abs(exact - cwt_single(f, haar, 1.0, 0.0, growth_order=1)) <= 1e-8


@pytest.mark.parametrize("kind", ["mexican_hat", "haar", "gaussian_derivative"])
def test_constant_signal_is_annihilated(kind):
    psi = make_wavelet(kind)
    f = PolynomialSignal((2.5,))
    for s in SCALES:
        for t in SHIFTS:
            assert abs(polynomial_pairing(f, psi, s, t)) <= 1e-9


@pytest.mark.parametrize("kind", ["mexican_hat", "haar"])
@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_pairing_matches_quadrature(kind, degree):
    psi = make_wavelet(kind)
    f = PolynomialSignal((0.5, -1.0, 0.25, 0.1)[: degree + 1])
    moments = moment_vector(psi, degree)
    for s in SCALES:
        for t in SHIFTS:
            exact = polynomial_pairing(f, psi, s, t, moments)
            reference = cwt_single(f, psi, s, t, growth_order=degree)
            assert abs(exact - reference) <= 1e-6


def test_pairing_is_homogeneous_in_scale(mexican):
    f = PolynomialSignal.monomial(2)
    moments = moment_vector(mexican, 2)
    for t in SHIFTS:
        ratio = polynomial_pairing(f, mexican, 2.0, t, moments) / polynomial_pairing(f, mexican, 1.0, t, moments)
        assert abs(ratio - 2.0 ** 2.5) <= 1e-10 * 2.0 ** 2.5


@pytest.mark.parametrize("kind,vanishing_degree", [("mexican_hat", 1), ("haar", 0)])
def test_annihilation_iff_vanishing_moments(kind, vanishing_degree):
    psi = make_wavelet(kind)
    grid = [(s, t) for s in (0.5, 0.75, 1.0, 1.5, 2.0) for t in (-2.0, -1.0, 0.0, 1.0, 2.0)]

    annihilated = PolynomialSignal.monomial(vanishing_degree)
    assert max(abs(polynomial_pairing(annihilated, psi, s, t)) for s, t in grid) <= 1e-9

    detected = PolynomialSignal.monomial(vanishing_degree + 1)
    assert max(abs(polynomial_pairing(detected, psi, s, t)) for s, t in grid) > 1e-3


def test_pairing_validation(mexican):
    f = PolynomialSignal((1.0, 1.0, 1.0))
    with pytest.raises(ValidationError):
        polynomial_pairing(f, mexican, 0.0, 0.0)
    with pytest.raises(ValidationError):
        polynomial_pairing(f, mexican, 1.0, 0.0, moment_vector(mexican, 1))
    with pytest.raises(ValidationError):
        polynomial_pairing(f, make_wavelet("poisson_derivative"), 1.0, 0.0)


# --------------------------------------------------
# 矩恢复
# --------------------------------------------------
def test_zero_pairing_recovers_vanishing_moments():
    f = PolynomialSignal((3.0, -1.0, 1.0))
    t = np.linspace(-1.0, 1.0, 5)
    recovered = moment_recovery(t, np.zeros_like(t), f, 1.0)
    assert recovered.order == 2
    assert np.all(recovered.values == 0)


def test_haar_round_trip(haar):
    f = PolynomialSignal((0.0, 1.0))
    t = np.array([-1.0, 0.0, 1.0])
    samples = [polynomial_pairing(f, haar, 1.0, ti) for ti in t]
    recovered = moment_recovery(t, samples, f, 1.0)
    assert abs(recovered[0]) <= 1e-8
    assert abs(recovered[1] + 0.25) <= 1e-8


@pytest.mark.parametrize("kind,params,max_degree", RECOVERABLE)
def test_recovery_inverts_pairing(kind, params, max_degree):
    psi = make_wavelet(kind, params)
    moments = moment_vector(psi, max_degree)
    for degree in range(max_degree + 1):
        f = PolynomialSignal(tuple(1.0 + 0.5 * k for k in range(degree + 1)))
        for s in (0.5, 2.0):
            t = np.linspace(-1.5, 1.5, degree + 3)
            samples = [polynomial_pairing(f, psi, s, ti, moments) for ti in t]
            recovered = moment_recovery(t, samples, f, s)
            scale = max(1.0, float(np.max(np.abs(moments.values[: degree + 1]))))
            assert np.max(np.abs(recovered.values - moments.values[: degree + 1])) <= 1e-8 * scale


def test_recovery_rejects_degenerate_inputs():
    with pytest.raises(DegenerateLeadingCoefficient):
        moment_recovery([0.0, 1.0, 2.0], [0.0, 0.0, 0.0], PolynomialSignal((0.0, 0.0, 0.0)), 1.0)
    f = PolynomialSignal((0.0, 0.0, 1.0))
    with pytest.raises(ValidationError):
        moment_recovery([0.0, 1.0], [0.0, 0.0], f, 1.0)
    with pytest.raises(ValidationError):
        moment_recovery([0.0, 1.0, 1.0], [0.0, 0.0, 0.0], f, 1.0)
    with pytest.raises(ValidationError):
        moment_recovery([0.0, 1.0, 2.0], [0.0, 0.0, 0.0], f, -1.0)
