# -*- coding: utf-8 -*-
"""
特殊函数与数值积分单元测试

scipy 仅作为独立参考实现使用。
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import special

from specfun import (
    QuadratureSpec,
    bessel_j0,
    bessel_j0_zeros,
    bessel_k,
    bessel_k_ex,
    gamma,
    hyp2f1_half,
    integrate,
    integrate_panels,
    log_gamma,
    upper_incomplete_gamma,
)
from utils.error_handler import ConvergenceError, DomainError


@pytest.mark.unit
class TestGamma:
    """Gamma 函数测试"""

    def test_known_values(self):
        """测试已知取值"""
        assert gamma(4.0) == pytest.approx(6.0, rel=1e-13)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
        assert gamma(3.5) == pytest.approx(3.3233509704, rel=1e-10)

    def test_shift(self):
        """测试 Γ(x+1) = xΓ(x)"""
        for x in np.linspace(0.5, 20.0, 40):
            assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)

    def test_log_gamma(self):
        """测试对数 Gamma"""
        for x in [0.1, 1.5, 7.25, 40.0]:
            assert log_gamma(x) == pytest.approx(special.gammaln(x), rel=1e-13)

    def test_domain(self):
        """测试定义域检查"""
        with pytest.raises(DomainError):
            gamma(0.0)
        with pytest.raises(DomainError):
            gamma(-1.5)

    @pytest.mark.parametrize("s,x", [(1.0, 2.0), (3.0, 0.0), (2.5, 10.0), (0.5, 0.3),
                                     (5.5, 3.0), (1.5, 75.8), (3.0, 62.8)])
    def test_upper_incomplete_gamma(self, s, x):
        """测试上不完全 Gamma 与参考实现一致"""
        expected = special.gammaincc(s, x) * special.gamma(s)
        assert upper_incomplete_gamma(s, x) == pytest.approx(expected, rel=1e-10)

    def test_upper_incomplete_gamma_examples(self):
        """测试解析取值"""
        assert upper_incomplete_gamma(1.0, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-12)
        assert upper_incomplete_gamma(3.0, 0.0) == pytest.approx(2.0, rel=1e-13)

    def test_upper_incomplete_gamma_matches_quadrature(self):
        """测试与定义积分的数值积分一致"""
        spec = QuadratureSpec(abs_tol=1e-17, rel_tol=1e-14)
        expected = integrate(lambda t: t ** 1.5 * np.exp(-t), 10.0, 200.0, spec)
        assert upper_incomplete_gamma(2.5, 10.0) == pytest.approx(expected, rel=1e-10)

    def test_upper_incomplete_gamma_domain(self):
        """测试参数检查"""
        with pytest.raises(DomainError):
            upper_incomplete_gamma(0.0, 1.0)
        with pytest.raises(DomainError):
            upper_incomplete_gamma(1.0, -1.0)


@pytest.mark.unit
class TestBesselK:
    """第二类修正 Bessel 函数测试"""

    def test_half_integer_values(self):
        """测试半整数阶的已知值"""
        assert bessel_k(0.5, 1.0) == pytest.approx(0.4610685044, rel=1e-9)
        assert bessel_k(1.5, 2.0) == pytest.approx(0.1799066579, rel=1e-9)

    @pytest.mark.parametrize("x", [0.5, 2.0, 10.0, 31.4])
    def test_seven_halves_closed_form(self, x):
        """测试 K_{7/2} 的初等表达式"""
        expected = math.sqrt(math.pi / (2 * x)) * math.exp(-x) * (1 + 6 / x + 15 / x ** 2 + 15 / x ** 3)
        assert bessel_k(3.5, x) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("nu", [0.0, 0.3, 1.0, 3.0, 7.8, 15.2, 22.5, 30.0])
    @pytest.mark.parametrize("x", [0.05, 0.7, 3.0, 12.0, 31.4, 44.4, 120.0])
    def test_against_reference(self, nu, x):
        """测试与参考实现的相对误差"""
        assert bessel_k(nu, x) == pytest.approx(special.kv(nu, x), rel=1e-10)

    def test_underflow_flag(self):
        """测试下溢返回 0 并给出标记"""
        result = bessel_k_ex(3.0, 900.0)
        assert result.value == 0.0
        assert result.underflow is True

        result = bessel_k_ex(3.0, 10.0)
        assert result.value > 0.0
        assert result.underflow is False

    @pytest.mark.parametrize("nu", [1.0, 1.3, 2.5, 4.0, 10.2])
    @pytest.mark.parametrize("x", [0.7, 3.0, 25.0, 38.0])
    def test_recurrence(self, nu, x):
        """测试三项递推 K_{ν+1} = K_{ν−1} + (2ν/x)K_ν"""
        expected = bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x)
        assert bessel_k(nu + 1.0, x) == pytest.approx(expected, rel=1e-8)

    def test_domain(self):
        """测试定义域检查"""
        with pytest.raises(DomainError):
            bessel_k(-0.5, 1.0)
        with pytest.raises(DomainError):
            bessel_k(1.0, 0.0)


@pytest.mark.unit
class TestBesselJ0:
    """零阶 Bessel 函数与零点测试"""

    def test_known_value(self):
        """测试 J₀(1)"""
        assert bessel_j0(1.0) == pytest.approx(0.7651976866, rel=1e-9)
        assert isinstance(bessel_j0(1.0), float)

    def test_against_reference(self):
        """测试数组输入与参考实现一致（覆盖两种算法的分界）"""
        x = np.linspace(-40.0, 400.0, 2001)
        np.testing.assert_allclose(bessel_j0(x), special.j0(x), rtol=0, atol=1e-13)

    def test_zeros(self):
        """测试零点近似"""
        zeros = bessel_j0_zeros(50)
        reference = special.jn_zeros(0, 50)
        assert abs(zeros[0] - reference[0]) < 5e-3
        np.testing.assert_allclose(zeros[5:], reference[5:], rtol=1e-9)


@pytest.mark.unit
class TestHypergeometric:
    """超几何函数测试"""

    @pytest.mark.parametrize("beta", [1.5, 4.0, 7.3, 20.0])
    @pytest.mark.parametrize("t", [0.01, 0.3, 1.0, 1.26, 5.0, 120.0])
    def test_against_reference(self, beta, t):
        """测试与不完全 Beta 函数表示一致"""
        b = beta - 0.5
        x = t * t / (1.0 + t * t)
        expected = 0.5 * special.beta(0.5, b) * special.betainc(0.5, b, x) / t
        assert hyp2f1_half(beta, t) == pytest.approx(expected, rel=1e-11)

    def test_integral_identity(self):
        """测试 t·₂F₁ 等于 ∫₀^t (1+y²)^{−β} dy"""
        for beta, t in [(4.0, 0.5), (4.0, 1.26), (6.5, 3.0)]:
            expected = integrate(lambda y: (1 + y * y) ** (-beta), 0.0, t)
            assert t * hyp2f1_half(beta, t) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("beta", [3.0, 4.0, 5.0])
    @pytest.mark.parametrize("theta", [0.3, 0.9, 1.4])
    @pytest.mark.parametrize("h", [1.0, 2.5])
    def test_matches_fov_quadrature(self, beta, theta, h):
        """测试 2h^{1−2β}tanθ·₂F₁ 等于 ∫_{−X}^{X} (x²+h²)^{−β} dx，X = h·tanθ"""
        tan = math.tan(theta)
        closed = 2.0 * h ** (1.0 - 2.0 * beta) * tan * hyp2f1_half(beta, tan)
        spec = QuadratureSpec(abs_tol=1e-20, rel_tol=1e-12)
        direct = 2.0 * integrate(lambda x: (x * x + h * h) ** (-beta), 0.0, h * tan, spec)
        assert closed == pytest.approx(direct, rel=1e-9)

    @pytest.mark.parametrize("beta", [3.0, 4.0, 5.0])
    @pytest.mark.parametrize("h", [1.0, 2.5])
    def test_wide_angle_limit(self, beta, h):
        """测试 θ → π/2 时趋于 √π·Γ(β−½)·h^{1−2β}/Γ(β)"""
        tan = math.tan(1.5707)
        closed = 2.0 * h ** (1.0 - 2.0 * beta) * tan * hyp2f1_half(beta, tan)
        limit = math.sqrt(math.pi) * gamma(beta - 0.5) * h ** (1.0 - 2.0 * beta) / gamma(beta)
        assert closed == pytest.approx(limit, rel=1e-6)

    def test_origin_and_domain(self):
        """测试 t=0 与参数检查"""
        assert hyp2f1_half(4.0, 0.0) == 1.0
        with pytest.raises(DomainError):
            hyp2f1_half(1.0, 0.5)
        with pytest.raises(DomainError):
            hyp2f1_half(4.0, -0.1)


@pytest.mark.unit
class TestQuadrature:
    """自适应积分测试"""

    def test_polynomial_and_exponential(self):
        """测试简单积分"""
        assert integrate(lambda x: x ** 3, 0.0, 2.0) == pytest.approx(4.0, rel=1e-14)
        assert integrate(np.exp, 0.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-13)

    def test_oscillatory_panels(self):
        """测试按零点分段的振荡积分"""
        omega = 40.0
        zeros = (np.arange(int(omega * 3.0 / math.pi)) + 0.5) * math.pi / omega
        breakpoints = np.concatenate([[0.0], zeros[zeros < 3.0], [3.0]])
        value = integrate_panels(lambda x: np.cos(omega * x) * np.exp(-x), breakpoints)
        expected = (1 - math.exp(-3.0) * (math.cos(3 * omega) - omega * math.sin(3 * omega))) / (1 + omega ** 2)
        assert value == pytest.approx(expected, abs=1e-13)

    def test_empty_interval(self):
        """测试零长度区间"""
        assert integrate(np.exp, 1.0, 1.0) == 0.0

    def test_domain(self):
        """测试端点检查"""
        with pytest.raises(DomainError):
            integrate(np.exp, 1.0, 0.0)
        with pytest.raises(DomainError):
            integrate(np.exp, 0.0, math.inf)

    def test_depth_budget(self):
        """测试深度耗尽时抛出收敛错误"""
        spec = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-15, max_depth=2)
        with pytest.raises(ConvergenceError):
            integrate(lambda x: np.abs(x - 0.3137) ** 0.5, 0.0, 1.0, spec)

    def test_spec_validation(self):
        """测试积分参数校验"""
        with pytest.raises(ValidationError):
            QuadratureSpec(abs_tol=0.0)
        with pytest.raises(ValidationError):
            QuadratureSpec(max_depth=0)
        assert QuadratureSpec().tolerance(1e6) == pytest.approx(1e-6)

    def test_deterministic(self):
        """测试相同输入逐位相同"""
        f = lambda x: np.sin(x) / (1 + x * x)  # noqa: E731
        assert integrate(f, 0.0, 30.0) == integrate(f, 0.0, 30.0)
