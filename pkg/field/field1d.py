# -*- coding: utf-8 -*-
"""
一维走廊网络的同频干扰

LED 位于 x = ia（i ∈ ℤ），接收机位于 z，标记 LED 为 i = 0。
提供三种算法：
  - 截断格点求和（oracle）
  - Poisson 求和闭式近似 Î_k(z)：常数项减去自身项，再加 k 个 Bessel-K 谱项
  - 有限视场 Î′_k(z)：Q′(0) 超几何闭式 + Q′(w/a) 分段数值积分
"""

import math
from typing import List, Optional

import numpy as np
import structlog

from channel.gain import fov_indicator, fov_mask, path_loss_term
from channel.params import NetworkParams
from field.results import ErrorDiagnostics, InterferenceMethod, InterferenceResult
from specfun.bessel import log_scaled_bessel_k
from specfun.gamma import log_gamma, upper_incomplete_gamma
from specfun.hypergeometric import hyp2f1_half
from specfun.quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate, integrate_panels
from utils.error_handler import ConvergenceError, DomainError

logger = structlog.get_logger(__name__)

MAX_SERIES_ORDER = 64
_LOG_TINY = math.log(np.finfo(float).tiny)


def _require_count(name: str, value: int, minimum: int) -> None:
    if int(value) != value or value < minimum:
        raise DomainError(f"{name} 必须为不小于 {minimum} 的整数", details={name: value})


def _tail_tolerance(spec: QuadratureSpec) -> float:
    return spec.abs_tol * 1e-3


def interference_oracle_1d(params: NetworkParams, z: float, n: int) -> InterferenceResult:
    """
    截断格点求和 Σ_{i=−n..n, i≠0} ((ia+z)² + h²)^{−β}

    Args:
        params: 网络参数
        z: 接收机位置
        n: 对称截断窗口 [−n, n] 的半宽（干扰源对数）
    """
    _require_count("n", n, 1)
    i = np.arange(-n, n + 1)
    i = i[i != 0]
    offsets = i * params.a + z
    terms = path_loss_term(params, offsets * offsets)
    return InterferenceResult(
        value=math.fsum(terms.tolist()),
        method=InterferenceMethod.ORACLE,
        terms_used=int(i.size),
    )


def spectrum_1d(params: NetworkParams, xi: float) -> float:
    """
    (x² + h²)^{−β} 的 Fourier 变换 Q(ξ)

    Q(0) = √π Γ(β−½) h^{1−2β} / Γ(β)
    Q(ξ) = 2√π/Γ(β)·(π|ξ|/h)^{β−½}·K_{β−½}(2πh|ξ|)
    """
    beta = params.beta
    h = params.h
    xi = abs(xi)
    if xi == 0.0:
        return math.exp(0.5 * math.log(math.pi) + log_gamma(beta - 0.5) - log_gamma(beta)
                        + (1.0 - 2.0 * beta) * math.log(h))

    nu = beta - 0.5
    x = 2.0 * math.pi * h * xi
    log_value = (math.log(2.0) + 0.5 * math.log(math.pi) - log_gamma(beta)
                 + nu * math.log(math.pi * xi / h)
                 + log_scaled_bessel_k(nu, x) - x)
    if log_value < _LOG_TINY:
        return 0.0
    return math.exp(log_value)


def interference_constant_1d(params: NetworkParams) -> float:
    """闭式近似的常数项 h^{1−2β}√πΓ(β−½)/(aΓ(β))，即位置平均干扰（含自身项）"""
    return spectrum_1d(params, 0.0) / params.a


def g_term_1d(params: NetworkParams, z: float, w: int) -> float:
    """
    第 w 个 Fourier 修正项

    g(w) = 2^{2−β}√(2π) h^{0.5−β} (2πw)^{β−0.5} K_{β−0.5}(2πhw/a) cos(2πwz/a) / (a^{0.5+β} Γ(β))
         = (2/a)·Q(w/a)·cos(2πwz/a)
    """
    _require_count("w", w, 1)
    a = params.a
    return 2.0 / a * spectrum_1d(params, w / a) * math.cos(2.0 * math.pi * w * z / a)


def error_diagnostics_1d(params: NetworkParams, k: int) -> ErrorDiagnostics:
    """
    截断到 k 项后的误差诊断

    Returns:
        ErrorDiagnostics: k 的选取下限 ⌈a(β−2)/(2πh)⌉、包络 (k+1)^{β−2}e^{−2πh(k+1)/a}、
        不完全 Gamma 尾部估计 (a/(2πh))^{β−1}Γ(β−1, 2πh(k+1)/a) 以及谱项峰值位置 w₀
    """
    _require_count("k", k, 0)
    beta = params.beta
    rate = 2.0 * math.pi * params.h / params.a
    w0 = (beta - 2.0) / rate
    return ErrorDiagnostics(
        k_min_rule=math.ceil(w0),
        envelope=(k + 1.0) ** (beta - 2.0) * math.exp(-rate * (k + 1.0)),
        tail_gamma_bound=rate ** (1.0 - beta) * upper_incomplete_gamma(beta - 1.0, rate * (k + 1.0)),
        term_peak_w0=w0,
        order=float(k),
    )


def choose_k_1d(params: NetworkParams, target_abs_error: float) -> int:
    """
    满足选取规则且尾部估计不超过目标误差的最小 k（上限 64）

    Raises:
        ConvergenceError: k 超过上限仍达不到目标
    """
    if not target_abs_error > 0.0:
        raise DomainError("目标误差必须为正", details={"target_abs_error": target_abs_error})

    k = error_diagnostics_1d(params, 0).k_min_rule
    while k <= MAX_SERIES_ORDER:
        if error_diagnostics_1d(params, k).tail_gamma_bound <= target_abs_error:
            return k
        k += 1
    raise ConvergenceError(
        "截断阶数超过上限仍未达到目标误差",
        details={"target_abs_error": target_abs_error, "cap": MAX_SERIES_ORDER},
    )


def closed_form_1d(params: NetworkParams, z: float, k: int) -> InterferenceResult:
    """
    Poisson 求和闭式近似 Î_k(z)

    Î_k(z) = h^{1−2β}√πΓ(β−0.5)/(aΓ(β)) − 1/(z²+h²)^β + Σ_{w=1}^k g(w)
    """
    diagnostics = error_diagnostics_1d(params, k)
    terms = [interference_constant_1d(params), -path_loss_term(params, z * z)]
    terms.extend(g_term_1d(params, z, w) for w in range(1, k + 1))
    value = math.fsum(terms)
    logger.debug("一维闭式干扰", z=z, k=k, value=value)
    return InterferenceResult(
        value=value,
        method=InterferenceMethod.CLOSED_FORM,
        terms_used=k,
        error_envelope=diagnostics.envelope,
        diagnostics=diagnostics,
    )


def q0_fov_1d(params: NetworkParams) -> float:
    """
    有限视场下的零频分量 Q′(0) = 2h^{1−2β}tan θ_f·₂F₁(0.5, β; 1.5; −tan²θ_f)

    θ_f = π/2 时退化为无约束的 Q(0)。
    """
    if params.unrestricted_fov:
        return spectrum_1d(params, 0.0)
    t = math.tan(params.theta_f)
    beta = params.beta
    return 2.0 * params.h ** (1.0 - 2.0 * beta) * t * hyp2f1_half(beta, t)


def effective_limit_1d(params: NetworkParams, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Q′ 积分的有效上限：视场半径与尾部可忽略半径中的较小者

    ∫_X^∞ 2(x²+h²)^{−β} dx ≤ 2X^{1−2β}/(2β−1)
    """
    beta = params.beta
    cutoff = (2.0 / ((2.0 * beta - 1.0) * _tail_tolerance(spec))) ** (1.0 / (2.0 * beta - 1.0))
    return min(params.fov_radius, cutoff)


def q_fov_1d(params: NetworkParams, w: int, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Q′(w/a) = ∫_{−X}^{X} cos(2πwx/a)·(x² + h²)^{−β} dx，X = h·tan θ_f

    在余弦零点之间分段积分；θ_f = π/2 时使用谱闭式。
    """
    _require_count("w", w, 0)
    if w == 0:
        return q0_fov_1d(params)
    freq = w / params.a
    if params.unrestricted_fov:
        return spectrum_1d(params, freq)

    h2 = params.h * params.h
    beta = params.beta
    upper = effective_limit_1d(params, spec)
    omega = 2.0 * math.pi * freq

    def integrand(x: np.ndarray) -> np.ndarray:
        return 2.0 * np.cos(omega * x) * (x * x + h2) ** (-beta)

    zeros = (np.arange(int(2.0 * freq * upper) + 1) + 0.5) / (2.0 * freq)
    zeros = zeros[zeros < upper]
    if zeros.size < 3:
        return integrate(integrand, 0.0, upper, spec)
    return integrate_panels(integrand, np.concatenate([[0.0], zeros, [upper]]), spec)


def interference_fov_1d(params: NetworkParams, z: float, k: int,
                        spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    有限视场闭式近似 Î′_k(z)

    Î′_k(z) = (1/a)[Q′(0) + Σ_{w=1}^k 2Q′(w/a)cos(2πwz/a)] − ρ(z)/(z²+h²)^β

    标记 LED 本身不在视场内时不减去自身项。
    """
    _require_count("k", k, 0)
    a = params.a
    terms = [q0_fov_1d(params)]
    terms.extend(
        2.0 * q_fov_1d(params, w, spec) * math.cos(2.0 * math.pi * w * z / a)
        for w in range(1, k + 1)
    )
    own = path_loss_term(params, z * z) if fov_indicator(z, params.h, params.theta_f) else 0.0
    value = math.fsum(terms) / a - own
    logger.debug("一维有限视场干扰", z=z, k=k, theta_f=params.theta_f, value=value)
    return InterferenceResult(
        value=value,
        method=InterferenceMethod.FOV_CLOSED_FORM,
        terms_used=k,
    )


def oracle_radius_1d(params: NetworkParams, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """视场内求和的截断半径；θ_f = π/2 时取尾部低于容差的半径"""
    beta = params.beta
    tol = _tail_tolerance(spec)
    cutoff = (2.0 / ((2.0 * beta - 1.0) * params.a * tol)) ** (1.0 / (2.0 * beta - 1.0))
    return min(params.fov_radius, cutoff)


def _visible_indices(params: NetworkParams, z: float, spec: QuadratureSpec) -> np.ndarray:
    radius = oracle_radius_1d(params, spec)
    a = params.a
    lo = math.floor((-radius - z) / a) - 1
    hi = math.ceil((radius - z) / a) + 1
    i = np.arange(lo, hi + 1)
    i = i[i != 0]
    offsets = i * a + z
    keep = fov_mask(offsets, params.h, params.theta_f) & (np.abs(offsets) <= radius)
    return i[keep]


def interference_fov_oracle_1d(params: NetworkParams, z: float,
                               spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    有限视场下的精确求和：所有满足 |z + ia| ≤ h·tan θ_f 的 i ≠ 0
    """
    i = _visible_indices(params, z, spec)
    offsets = i * params.a + z
    terms = path_loss_term(params, offsets * offsets)
    return InterferenceResult(
        value=math.fsum(terms.tolist()),
        method=InterferenceMethod.FOV_ORACLE,
        terms_used=int(i.size),
    )


def fov_thresholds_1d(params: NetworkParams, z: float, count: int) -> List[float]:
    """
    视场求和作为 θ_f 的阶梯函数时的前 count 个跳变角 atan(|z + ia|/h)
    """
    _require_count("count", count, 1)
    # 以离接收机最近的 LED 下标为中心扫描
    center = int(round(-z / params.a))
    i = np.arange(center - count - 1, center + count + 2)
    i = i[i != 0]
    angles = np.unique(np.arctan(np.abs(i * params.a + z) / params.h))
    return angles[:count].tolist()


def default_order_1d(params: NetworkParams, method: InterferenceMethod,
                     target_abs_error: float = 1e-10) -> Optional[int]:
    """CLI 未指定阶数时的默认值：oracle 用 n=50，闭式用 choose_k_1d"""
    if method == InterferenceMethod.ORACLE:
        return 50
    if method == InterferenceMethod.FOV_ORACLE:
        return None
    return choose_k_1d(params, target_abs_error)


def interference_1d(params: NetworkParams, z: float, method: InterferenceMethod,
                    order: Optional[int] = None,
                    spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    按方法分派的一维干扰计算

    Args:
        order: ORACLE 时为 n，闭式方法时为 k；为空时使用 default_order_1d
    """
    method = InterferenceMethod(method)
    if order is None:
        order = default_order_1d(params, method)
    if method == InterferenceMethod.ORACLE:
        return interference_oracle_1d(params, z, order)
    if method == InterferenceMethod.CLOSED_FORM:
        return closed_form_1d(params, z, order)
    if method == InterferenceMethod.FOV_CLOSED_FORM:
        return interference_fov_1d(params, z, order, spec)
    return interference_fov_oracle_1d(params, z, spec)
