# -*- coding: utf-8 -*-
"""
二维方格网络的同频干扰

LED 位于 (ua, vb)，a = b，接收机相对标记 LED 的偏移为 (dx, dy)。
闭式近似对下标集合 𝔸 按 w² + k² 递增顺序累加 Bessel-K 谱项；
轴上项 (w,0)、(0,k) 权重为 2，内部项 (w,k) 权重为 4。
"""

import math
from typing import List, Optional, Union

import numpy as np
import structlog

from channel.gain import fov_indicator, path_loss_term
from channel.params import NetworkParams
from field.results import (
    ErrorDiagnostics,
    FovInclusion,
    GridIndexSet,
    InterferenceMethod,
    InterferenceResult,
)
from specfun.bessel import bessel_j0, bessel_j0_zeros, log_scaled_bessel_k
from specfun.gamma import log_gamma, upper_incomplete_gamma
from specfun.quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate, integrate_panels
from utils.error_handler import ConvergenceError, DomainError

logger = structlog.get_logger(__name__)

MAX_GRID_ORDER = 64
_LOG_TINY = math.log(np.finfo(float).tiny)


def _require_count(name: str, value: int, minimum: int) -> None:
    if int(value) != value or value < minimum:
        raise DomainError(f"{name} 必须为不小于 {minimum} 的整数", details={name: value})


def _tail_tolerance(spec: QuadratureSpec) -> float:
    return spec.abs_tol * 1e-3


def _lattice_terms(params: NetworkParams, dx: float, dy: float, n: int):
    """[−n, n]² 上（去掉原点）的格点距离平方与接收功率，按行排列"""
    a = params.a
    u = np.arange(-n, n + 1)
    ox = (u * a + dx)[:, None]
    oy = (u * a + dy)[None, :]
    dist_sq = ox * ox + oy * oy
    terms = path_loss_term(params, dist_sq)
    terms[n, n] = 0.0
    return u, dist_sq, terms


def interference_oracle_2d(params: NetworkParams, dx: float, dy: float, n: int) -> InterferenceResult:
    """
    截断格点求和：[−n, n]² 内除标记 LED 外所有 LED 的 ((ua+dx)² + (va+dy)²+h²)^{−β}

    Args:
        params: 网络参数
        dx, dy: 接收机相对标记 LED 的偏移
        n: 方形窗口半宽
    """
    _require_count("n", n, 1)
    _, _, terms = _lattice_terms(params, dx, dy, n)
    return InterferenceResult(
        value=math.fsum(terms.ravel().tolist()),
        method=InterferenceMethod.ORACLE,
        terms_used=(2 * n + 1) ** 2 - 1,
    )


def row_sum_oracle_2d(params: NetworkParams, dx: float, dy: float, n: int) -> InterferenceResult:
    """
    先对每一行求和、再对行和求和的格点求和

    与 interference_oracle_2d 相同的窗口，用于检验按行分解的求和与直接求和一致。
    """
    _require_count("n", n, 1)
    _, _, terms = _lattice_terms(params, dx, dy, n)
    row_sums = [math.fsum(row.tolist()) for row in terms]
    return InterferenceResult(
        value=math.fsum(row_sums),
        method=InterferenceMethod.ORACLE,
        terms_used=(2 * n + 1) ** 2 - 1,
    )


def spectrum_2d(params: NetworkParams, s: float) -> float:
    """
    (r² + h²)^{−β} 的二维 Fourier 变换（径向频率 s）

    Q(0) = π h^{2−2β}/(β−1)
    Q(s) = 2π(πs/h)^{β−1}·K_{β−1}(2πhs)/Γ(β)
    """
    beta = params.beta
    h = params.h
    s = abs(s)
    if s == 0.0:
        return math.pi * h ** (2.0 - 2.0 * beta) / (beta - 1.0)

    nu = beta - 1.0
    x = 2.0 * math.pi * h * s
    log_value = (math.log(2.0 * math.pi) - log_gamma(beta)
                 + nu * math.log(math.pi * s / h)
                 + log_scaled_bessel_k(nu, x) - x)
    if log_value < _LOG_TINY:
        return 0.0
    return math.exp(log_value)


def interference_constant_2d(params: NetworkParams) -> float:
    """闭式近似的常数项 h^{2−2β}π/(a²(β−1))"""
    return spectrum_2d(params, 0.0) / (params.a * params.a)


def _axis_weight(w: int, k: int) -> float:
    return (2.0 if w > 0 else 1.0) * (2.0 if k > 0 else 1.0)


def g_term_2d(params: NetworkParams, dx: float, dy: float, w: int, k: int) -> float:
    """
    谱项 g(w, k) = ε_w ε_k·Q(√(w²+k²)/a)/a²·cos(2πw·dx/a)·cos(2πk·dy/a)

    ε = 1（下标为 0）或 2，(w, k) ≠ (0, 0)。
    """
    _require_count("w", w, 0)
    _require_count("k", k, 0)
    if w == 0 and k == 0:
        raise DomainError("(0, 0) 属于常数项，不是谱项")
    a = params.a
    s = math.hypot(w, k) / a
    return (_axis_weight(w, k) * spectrum_2d(params, s) / (a * a)
            * math.cos(2.0 * math.pi * w * dx / a) * math.cos(2.0 * math.pi * k * dy / a))


def error_diagnostics_2d(params: NetworkParams, index_set: GridIndexSet) -> ErrorDiagnostics:
    """
    截断到 index_set 后的误差诊断，r = √(j² + l²)

    包络 (r+1)^{β−2.5}e^{−2πh(r+1)/a}，选取下限 ⌈a(β−2.5)/(2πh)⌉，
    尾部估计 (a/(2πh))^{β−1.5}·Γ(β−1.5, 2πh(r+1)/a)
    """
    beta = params.beta
    rate = 2.0 * math.pi * params.h / params.a
    r = index_set.radius
    r0 = (beta - 2.5) / rate
    return ErrorDiagnostics(
        k_min_rule=math.ceil(r0),
        envelope=(r + 1.0) ** (beta - 2.5) * math.exp(-rate * (r + 1.0)),
        tail_gamma_bound=rate ** (1.5 - beta) * upper_incomplete_gamma(beta - 1.5, rate * (r + 1.0)),
        term_peak_w0=r0,
        order=r,
    )


def choose_jl_2d(params: NetworkParams, target_abs_error: float) -> GridIndexSet:
    """
    满足选取规则且尾部估计不超过目标误差的最小方形下标集合 [0, j]²

    Raises:
        ConvergenceError: j 超过上限仍达不到目标
    """
    if not target_abs_error > 0.0:
        raise DomainError("目标误差必须为正", details={"target_abs_error": target_abs_error})

    for order in range(MAX_GRID_ORDER + 1):
        index_set = GridIndexSet.square(order)
        diagnostics = error_diagnostics_2d(params, index_set)
        if diagnostics.satisfies_rule and diagnostics.tail_gamma_bound <= target_abs_error:
            return index_set
    raise ConvergenceError(
        "下标集合超过上限仍未达到目标误差",
        details={"target_abs_error": target_abs_error, "cap": MAX_GRID_ORDER},
    )


def closed_form_2d(params: NetworkParams, dx: float, dy: float,
                   index_set: GridIndexSet) -> InterferenceResult:
    """
    二维闭式近似 Î_{j,l}(dx, dy) = 常数项 − 自身项 + Σ_{(w,k)∈𝔸} g(w, k)
    """
    diagnostics = error_diagnostics_2d(params, index_set)
    terms = [interference_constant_2d(params), -path_loss_term(params, dx * dx + dy * dy)]
    terms.extend(g_term_2d(params, dx, dy, w, k) for w, k in index_set)
    value = math.fsum(terms)
    logger.debug("二维闭式干扰", dx=dx, dy=dy, j=index_set.j, l=index_set.l, value=value)
    return InterferenceResult(
        value=value,
        method=InterferenceMethod.CLOSED_FORM,
        terms_used=index_set.size,
        error_envelope=diagnostics.envelope,
        diagnostics=diagnostics,
    )


def q00_fov_2d(params: NetworkParams) -> float:
    """
    有限视场零频分量 Q′(0, 0) = π h^{2−2β}/(β−1)·(1 − cos^{2β−2} θ_f)
    """
    beta = params.beta
    full = spectrum_2d(params, 0.0)
    if params.unrestricted_fov:
        return full
    return -full * math.expm1((2.0 * beta - 2.0) * math.log(math.cos(params.theta_f)))


def effective_limit_2d(params: NetworkParams, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Q′ 径向积分的有效上限

    2π∫_X^∞ r(r²+h²)^{−β} dr ≤ 2πX^{2−2β}/(2β−2)
    """
    beta = params.beta
    cutoff = (2.0 * math.pi / ((2.0 * beta - 2.0) * _tail_tolerance(spec))) ** (1.0 / (2.0 * beta - 2.0))
    return min(params.fov_radius, cutoff)


def q_fov_2d(params: NetworkParams, w_over_a: float, k_over_a: float,
             spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Q′(w/a, k/a) = 2π∫_0^X J₀(2πrs)·r/(r² + h²)^β dr，s = √((w/a)² + (k/a)²)

    在 J₀ 零点 r_m = j_{0,m}/(2πs) 处分段；零点少于 3 个时直接自适应积分。
    """
    s = math.hypot(w_over_a, k_over_a)
    if s == 0.0:
        return q00_fov_2d(params)
    if params.unrestricted_fov:
        return spectrum_2d(params, s)

    h2 = params.h * params.h
    beta = params.beta
    upper = effective_limit_2d(params, spec)
    omega = 2.0 * math.pi * s

    def integrand(r: np.ndarray) -> np.ndarray:
        return 2.0 * math.pi * bessel_j0(omega * r) * r * (r * r + h2) ** (-beta)

    zeros = bessel_j0_zeros(int(2.0 * s * upper) + 2) / omega
    zeros = zeros[zeros < upper]
    if zeros.size < 3:
        return integrate(integrand, 0.0, upper, spec)
    return integrate_panels(integrand, np.concatenate([[0.0], zeros, [upper]]), spec)


def interference_fov_2d(params: NetworkParams, dx: float, dy: float, index_set: GridIndexSet,
                        spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    有限视场二维闭式近似

    (1/a²)[Q′(0,0) + Σ_{(w,k)∈𝔸} ε_w ε_k Q′(w/a, k/a)cos(2πw·dx/a)cos(2πk·dy/a)]
    − ρ(D₀)/(dx² + dy² + h²)^β
    """
    a = params.a
    terms = [q00_fov_2d(params)]
    for w, k in index_set:
        terms.append(
            _axis_weight(w, k) * q_fov_2d(params, w / a, k / a, spec)
            * math.cos(2.0 * math.pi * w * dx / a) * math.cos(2.0 * math.pi * k * dy / a)
        )
    dist_sq = dx * dx + dy * dy
    own = path_loss_term(params, dist_sq) \
        if fov_indicator(math.sqrt(dist_sq), params.h, params.theta_f) else 0.0
    value = math.fsum(terms) / (a * a) - own
    logger.debug("二维有限视场干扰", dx=dx, dy=dy, theta_f=params.theta_f, value=value)
    return InterferenceResult(
        value=value,
        method=InterferenceMethod.FOV_CLOSED_FORM,
        terms_used=index_set.size,
    )


def oracle_radius_2d(params: NetworkParams, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """视场内求和的截断半径；θ_f = π/2 时取尾部低于容差的半径"""
    beta = params.beta
    a = params.a
    tol = _tail_tolerance(spec)
    cutoff = (2.0 * math.pi / ((2.0 * beta - 2.0) * a * a * tol)) ** (1.0 / (2.0 * beta - 2.0))
    return min(params.fov_radius, cutoff)


def interference_fov_oracle_2d(params: NetworkParams, dx: float, dy: float,
                               inclusion: FovInclusion = FovInclusion.RADIAL,
                               spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    有限视场二维精确求和

    Args:
        inclusion: RADIAL 纳入地面距离 D ≤ h·tan θ_f 的 LED；
                   RING 纳入方环 max(|u|,|v|)·a ≤ h·tan θ_f 内的 LED
    """
    radius = oracle_radius_2d(params, spec)
    a = params.a
    n = int(math.ceil((radius + math.hypot(dx, dy)) / a)) + 1
    u, dist_sq, terms = _lattice_terms(params, dx, dy, n)

    if inclusion == FovInclusion.RING:
        ring = np.maximum(np.abs(u)[:, None], np.abs(u)[None, :]) * a
        keep = ring <= radius
    else:
        keep = np.sqrt(dist_sq) <= radius
    keep[n, n] = False

    value = math.fsum(terms[keep].tolist())
    logger.debug("二维有限视场求和", dx=dx, dy=dy, inclusion=inclusion.value, window=n, value=value)
    return InterferenceResult(
        value=value,
        method=InterferenceMethod.FOV_ORACLE,
        terms_used=int(np.count_nonzero(keep)),
    )


def fov_thresholds_2d(params: NetworkParams, dx: float, dy: float, count: int) -> List[float]:
    """视场求和作为 θ_f 的阶梯函数时的前 count 个跳变角 atan(D/h)"""
    _require_count("count", count, 1)
    n = count + 1
    a = params.a
    cu, cv = int(round(-dx / a)), int(round(-dy / a))
    uu, vv = np.meshgrid(np.arange(cu - n, cu + n + 1), np.arange(cv - n, cv + n + 1), indexing="ij")
    tagged = (uu == 0) & (vv == 0)
    dist = np.hypot(uu[~tagged] * a + dx, vv[~tagged] * a + dy)
    # 窗口外的 LED 距离都不小于 (n + 0.5)·a
    dist = dist[dist < n * a]
    angles = np.unique(np.arctan(dist / params.h))
    return angles[:count].tolist()


def default_index_set_2d(params: NetworkParams, target_abs_error: float = 1e-10) -> GridIndexSet:
    """CLI 未指定 (j, l) 时的默认下标集合"""
    return choose_jl_2d(params, target_abs_error)


def interference_2d(params: NetworkParams, dx: float, dy: float, method: InterferenceMethod,
                    order: Optional[Union[int, GridIndexSet]] = None,
                    inclusion: FovInclusion = FovInclusion.RADIAL,
                    spec: QuadratureSpec = DEFAULT_QUADRATURE) -> InterferenceResult:
    """
    按方法分派的二维干扰计算

    Args:
        order: ORACLE 时为窗口半宽 n（默认 100），闭式方法时为 GridIndexSet
        inclusion: 仅 FOV_ORACLE 使用
    """
    method = InterferenceMethod(method)
    if method == InterferenceMethod.ORACLE:
        return interference_oracle_2d(params, dx, dy, 100 if order is None else int(order))
    if method == InterferenceMethod.FOV_ORACLE:
        return interference_fov_oracle_2d(params, dx, dy, inclusion, spec)

    if order is None:
        order = default_index_set_2d(params)
    elif not isinstance(order, GridIndexSet):
        order = GridIndexSet.square(int(order))
    if method == InterferenceMethod.CLOSED_FORM:
        return closed_form_2d(params, dx, dy, order)
    return interference_fov_2d(params, dx, dy, order, spec)
