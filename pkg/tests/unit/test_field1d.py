# -*- coding: utf-8 -*-
"""
一维走廊网络干扰单元测试
"""

import math

import numpy as np
import pytest

from channel.params import HALF_PI, NetworkParams
from field.field1d import (
    MAX_SERIES_ORDER,
    choose_k_1d,
    closed_form_1d,
    default_order_1d,
    effective_limit_1d,
    error_diagnostics_1d,
    fov_thresholds_1d,
    g_term_1d,
    interference_1d,
    interference_constant_1d,
    interference_fov_1d,
    interference_fov_oracle_1d,
    interference_oracle_1d,
    q0_fov_1d,
    q_fov_1d,
    spectrum_1d,
)
from field.results import InterferenceMethod
from specfun.quadrature import QuadratureSpec, integrate
from utils.error_handler import ConvergenceError, DomainError

NEAREST_PAIR = 2.0 / 6.5 ** 4
SECOND_PAIR = 2.0 / 7.25 ** 4


def with_fov(params: NetworkParams, theta_f: float) -> NetworkParams:
    return params.replace(theta_f=theta_f)


@pytest.mark.unit
class TestOracle1D:
    """截断格点求和测试"""

    def test_golden_values(self, canonical_params):
        """测试标准验证点的求和值"""
        assert interference_oracle_1d(canonical_params, 0.25, 1).value == \
            pytest.approx(0.00109406162488395, rel=1e-12)
        assert interference_oracle_1d(canonical_params, 0.25, 50).value == \
            pytest.approx(0.00258720271348607, rel=1e-12)

    def test_terms_used(self, canonical_params):
        """测试计入的干扰源个数"""
        result = interference_oracle_1d(canonical_params, 0.0, 7)
        assert result.terms_used == 14
        assert result.method == InterferenceMethod.ORACLE
        assert result.error_envelope is None

    def test_saturation(self, canonical_params):
        """测试干扰随窗口增大单调增加并饱和"""
        values = [interference_oracle_1d(canonical_params, 0.25, n).value for n in range(1, 51)]
        assert all(b > a for a, b in zip(values, values[1:]))
        reference = interference_oracle_1d(canonical_params, 0.25, 500).value
        assert reference - values[-1] < 1e-10

    @pytest.mark.parametrize("n", [0, -3, 2.5])
    def test_invalid_window(self, canonical_params, n):
        """测试非法窗口"""
        with pytest.raises(DomainError):
            interference_oracle_1d(canonical_params, 0.0, n)


@pytest.mark.unit
class TestClosedForm1D:
    """Poisson 闭式近似测试"""

    def test_constant(self, canonical_params):
        """测试常数项"""
        assert interference_constant_1d(canonical_params) == pytest.approx(0.00321699087727595, rel=1e-12)
        expected = math.sqrt(math.pi) * math.gamma(3.5) * 2.5 ** -7 / (0.5 * math.gamma(4.0))
        assert interference_constant_1d(canonical_params) == pytest.approx(expected, rel=1e-12)

    def test_golden_value(self, canonical_params):
        """测试 Î₁(0.25)"""
        result = closed_form_1d(canonical_params, 0.25, 1)
        assert result.value == pytest.approx(0.00258720279835122, rel=1e-10)
        assert result.terms_used == 1
        assert result.method == InterferenceMethod.CLOSED_FORM
        assert result.diagnostics.satisfies_rule

    def test_first_correction_term(self, canonical_params):
        """测试第一个修正项的量级与符号"""
        g1 = g_term_1d(canonical_params, 0.25, 1)
        assert g1 < 0.0
        assert abs(g1) == pytest.approx(3.6447e-13, rel=1e-4)
        assert abs(g_term_1d(canonical_params, 0.125, 1)) < 1e-25

    def test_spectrum_origin(self, canonical_params):
        """测试 ξ → 0 时谱连续"""
        assert spectrum_1d(canonical_params, 1e-6) == pytest.approx(spectrum_1d(canonical_params, 0.0), rel=1e-6)
        assert spectrum_1d(canonical_params, -2.0) == spectrum_1d(canonical_params, 2.0)

    def test_spectrum_underflow(self, canonical_params):
        """测试谱在高频下溢为 0"""
        assert spectrum_1d(canonical_params, 1e4) == 0.0

    @pytest.mark.parametrize("h,a", [(2.5, 1.0), (2.5, 0.5), (2.5, 0.2)])
    def test_converges_to_reference(self, h, a):
        """测试闭式近似与大窗口求和一致"""
        params = NetworkParams(h=h, a=a)
        for z in [0.0, 0.3 * a, 0.5 * a]:
            closed = closed_form_1d(params, z, 6).value
            reference = interference_oracle_1d(params, z, 500).value
            assert closed == pytest.approx(reference, abs=1e-13)

    def test_periodic_and_symmetric(self, canonical_params):
        """测试对 z 的周期性与对称性"""
        value = closed_form_1d(canonical_params, 0.1, 2).value
        assert closed_form_1d(canonical_params, -0.1, 2).value == pytest.approx(value, rel=1e-12)
        shifted = closed_form_1d(canonical_params, 0.6, 2).value
        own_shift = (0.36 + 6.25) ** -4 - (0.01 + 6.25) ** -4
        # 平移一个周期后，被减去的自身项不同
        assert shifted == pytest.approx(value - own_shift, rel=1e-10)

    def test_increases_towards_cell_edge(self, canonical_params):
        """测试干扰从小区中心到边缘单调增加"""
        values = [closed_form_1d(canonical_params, z, 1).value for z in np.linspace(0.0, 0.25, 26)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_term_ratio_decay(self):
        """测试相邻修正项之比接近 e^{−2πh/a}"""
        params = NetworkParams(h=2.5, a=0.5)
        decay = math.exp(-2.0 * math.pi * 5.0)
        for w in range(5, 11):
            ratio = g_term_1d(params, 0.0, w + 1) / g_term_1d(params, 0.0, w)
            assert 0.1 * decay <= ratio <= 10.0 * decay

    def test_error_ratio_decay(self):
        """测试截断误差随 k 以 e^{−2πh/a} 的速率衰减"""
        params = NetworkParams(h=2.5, a=2.5)
        reference = interference_oracle_1d(params, 0.0, 500).value
        errors = [closed_form_1d(params, 0.0, k).value - reference for k in (1, 2, 3)]
        decay = math.exp(-2.0 * math.pi)
        for e_k, e_next in zip(errors, errors[1:]):
            assert decay / 10.0 <= e_next / e_k <= 10.0 * decay


@pytest.mark.unit
class TestDiagnostics1D:
    """误差诊断与阶数选择测试"""

    def test_diagnostics(self, canonical_params):
        """测试诊断量的表达式"""
        rate = 2.0 * math.pi * 5.0
        diagnostics = error_diagnostics_1d(canonical_params, 1)
        assert diagnostics.k_min_rule == 1
        assert diagnostics.term_peak_w0 == pytest.approx(2.0 / rate)
        assert diagnostics.envelope == pytest.approx(4.0 * math.exp(-2.0 * rate), rel=1e-12)
        assert 0.0 < diagnostics.tail_gamma_bound < diagnostics.envelope
        assert diagnostics.order == 1.0

    @pytest.mark.parametrize("a", [0.5, 0.2])
    def test_choose_k(self, a):
        """测试常见几何下一项即可"""
        assert choose_k_1d(NetworkParams(h=2.5, a=a), 1e-9) == 1

    def test_choose_k_loose_target(self):
        """测试宽松目标时取选取规则的下限"""
        params = NetworkParams(h=0.1, a=1.0)
        assert choose_k_1d(params, 1e300) == error_diagnostics_1d(params, 0).k_min_rule == 4

    def test_choose_k_monotone_in_target(self):
        """测试目标越严格阶数越大"""
        params = NetworkParams(h=0.5, a=1.0)
        orders = [choose_k_1d(params, t) for t in (1e-4, 1e-8, 1e-12)]
        assert orders == sorted(orders)

    def test_choose_k_cap(self):
        """测试超过上限时抛出收敛错误"""
        with pytest.raises(ConvergenceError):
            choose_k_1d(NetworkParams(h=0.1, a=10.0), 1e-10)
        with pytest.raises(DomainError):
            choose_k_1d(NetworkParams(), 0.0)

    def test_default_order(self, canonical_params):
        """测试默认阶数"""
        assert default_order_1d(canonical_params, InterferenceMethod.ORACLE) == 50
        assert default_order_1d(canonical_params, InterferenceMethod.FOV_ORACLE) is None
        assert default_order_1d(canonical_params, InterferenceMethod.CLOSED_FORM) == 1
        assert MAX_SERIES_ORDER == 64


@pytest.mark.unit
class TestFov1D:
    """有限视场测试"""

    def test_q0_matches_integral(self, canonical_params):
        """测试 Q′(0) 的超几何闭式等于直接积分"""
        params = with_fov(canonical_params, 0.9)
        upper = 2.5 * math.tan(0.9)
        spec = QuadratureSpec(abs_tol=1e-17, rel_tol=1e-14)
        expected = integrate(lambda x: 2.0 * (x * x + 6.25) ** -4, 0.0, upper, spec)
        assert q0_fov_1d(params) == pytest.approx(expected, rel=1e-10)

    def test_unrestricted_matches_closed_form(self, canonical_params):
        """测试 θ_f = π/2 时退化为普通闭式"""
        fov = interference_fov_1d(canonical_params, 0.1, 3).value
        assert fov == pytest.approx(closed_form_1d(canonical_params, 0.1, 3).value, rel=1e-13)
        assert q_fov_1d(canonical_params, 2) == spectrum_1d(canonical_params, 4.0)

    def test_effective_limit(self, canonical_params):
        """测试有效积分上限取视场半径与尾部半径的较小者"""
        assert effective_limit_1d(with_fov(canonical_params, 0.3)) == pytest.approx(2.5 * math.tan(0.3))
        assert effective_limit_1d(canonical_params) < 1e3

    @pytest.mark.parametrize("theta,expected", [
        (0.25, NEAREST_PAIR),
        (0.30, NEAREST_PAIR),
        (0.45, NEAREST_PAIR + SECOND_PAIR),
        (0.15, 0.0),
    ])
    def test_plateaus(self, canonical_params, theta, expected):
        """测试视场截断下的平台值"""
        params = with_fov(canonical_params, theta)
        oracle = interference_fov_oracle_1d(params, 0.0)
        assert oracle.value == pytest.approx(expected, rel=1e-12, abs=1e-300)
        closed = interference_fov_1d(params, 0.0, 64)
        assert closed.value == pytest.approx(expected, abs=2e-5)

    def test_plateau_literals(self):
        """测试平台值的数值"""
        assert NEAREST_PAIR == pytest.approx(0.00112041, rel=1e-5)
        assert NEAREST_PAIR + SECOND_PAIR == pytest.approx(0.00184431, rel=1e-5)

    def test_nearly_unrestricted(self, canonical_params):
        """测试视场接近 π/2 时接近无约束干扰"""
        params = with_fov(canonical_params, 1.5707)
        assert interference_fov_1d(params, 0.0, 4).value == pytest.approx(0.00256163, abs=1e-5)

    def test_step_at_threshold(self, canonical_params):
        """测试精确求和在门限两侧跳变"""
        threshold = math.atan(0.5 / 2.5)
        below = interference_fov_oracle_1d(with_fov(canonical_params, threshold - 1e-9), 0.0)
        above = interference_fov_oracle_1d(with_fov(canonical_params, threshold + 1e-9), 0.0)
        assert below.value == 0.0
        assert below.terms_used == 0
        assert above.value == pytest.approx(NEAREST_PAIR, rel=1e-12)
        assert above.terms_used == 2

    def test_own_term_outside_fov(self, canonical_params):
        """测试标记 LED 不在视场内时不减自身项"""
        params = with_fov(canonical_params, 0.05)
        value = interference_fov_1d(params, 0.25, 64).value
        assert value == pytest.approx(0.0, abs=2e-5)

    def test_thresholds(self, canonical_params):
        """测试跳变角"""
        assert fov_thresholds_1d(canonical_params, 0.0, 3) == pytest.approx(
            [math.atan(0.2), math.atan(0.4), math.atan(0.6)])
        assert fov_thresholds_1d(canonical_params, 0.25, 3) == pytest.approx(
            [math.atan(0.1), math.atan(0.3), math.atan(0.5)])

    @pytest.mark.parametrize("z", [2.1, -2.1])
    def test_thresholds_away_from_origin(self, canonical_params, z):
        """测试接收机远离标记 LED 时跳变角仍从最近的 LED 开始"""
        assert fov_thresholds_1d(canonical_params, z, 3) == pytest.approx(
            [math.atan(0.1 / 2.5), math.atan(0.4 / 2.5), math.atan(0.6 / 2.5)])
        first = fov_thresholds_1d(canonical_params, z, 1)[0]
        below = interference_fov_oracle_1d(with_fov(canonical_params, first - 1e-9), z)
        above = interference_fov_oracle_1d(with_fov(canonical_params, first + 1e-9), z)
        assert below.terms_used == 0
        assert above.terms_used == 1

    def test_low_order_oscillation(self, canonical_params):
        """测试低阶有限视场闭式围绕平台值振荡

        阶跃核的谱衰减很慢：k=1 偏高约 8.9e-5，提高阶数后误差降到 2e-5 以内。
        有限视场闭式不给出误差包络。
        """
        params = with_fov(canonical_params, 0.25)
        first = interference_fov_1d(params, 0.0, 1)
        assert first.value == pytest.approx(1.2094e-3, rel=1e-3)
        assert first.value - NEAREST_PAIR == pytest.approx(8.9e-5, rel=0.05)
        assert first.error_envelope is None
        assert first.terms_used == 1
        for k in (4, 16, 64):
            assert abs(interference_fov_1d(params, 0.0, k).value - NEAREST_PAIR) < 2e-5

    @pytest.mark.parametrize("z", [0.0, 0.1, 0.25])
    def test_nearly_unrestricted_matches_closed_form(self, canonical_params, z):
        """测试 θ_f = 1.5707 时与无视场约束的闭式一致"""
        params = with_fov(canonical_params, 1.5707)
        fov = interference_fov_1d(params, z, 4).value
        assert fov == pytest.approx(closed_form_1d(canonical_params, z, 4).value, abs=1e-8)

    def test_oracle_unrestricted(self, canonical_params):
        """测试全视场精确求和与闭式近似一致"""
        oracle = interference_fov_oracle_1d(canonical_params, 0.25).value
        assert oracle == pytest.approx(closed_form_1d(canonical_params, 0.25, 4).value, abs=1e-12)
        assert canonical_params.theta_f == HALF_PI


@pytest.mark.unit
class TestDispatch1D:
    """按方法分派测试"""

    def test_dispatch(self, canonical_params):
        """测试各方法的分派与默认阶数"""
        assert interference_1d(canonical_params, 0.25, "oracle").value == \
            pytest.approx(0.00258720271348607, rel=1e-12)
        assert interference_1d(canonical_params, 0.25, InterferenceMethod.CLOSED_FORM, 1).value == \
            pytest.approx(0.00258720279835122, rel=1e-10)
        fov = interference_1d(with_fov(canonical_params, 0.45), 0.0, InterferenceMethod.FOV_ORACLE)
        assert fov.method == InterferenceMethod.FOV_ORACLE
        assert fov.terms_used == 4

    def test_unknown_method(self, canonical_params):
        """测试未知方法"""
        with pytest.raises(ValueError):
            interference_1d(canonical_params, 0.0, "nearest")
