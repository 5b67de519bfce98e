# -*- coding: utf-8 -*-
"""
Bessel 函数：第二类修正 Bessel 函数 K_ν(x) 与第一类零阶 Bessel 函数 J₀(x)

K_ν 先在对数域计算指数缩放值 e^x·K_ν(x)，再减去 x 后取指数，
因此当 e^{−x} 下溢时可以返回 0 并给出下溢标记，而不是报错。
"""

import math
import sys
from typing import NamedTuple, Union

import numpy as np
import structlog

from utils.error_handler import DomainError

logger = structlog.get_logger(__name__)

ArrayLike = Union[float, np.ndarray]

_LOG_TINY = math.log(sys.float_info.min)
_LN2 = math.log(2.0)

# 渐近展开适用区间：x ≥ 30 且 4ν² ≤ 2x 时各项单调递减
_ASYMPTOTIC_MIN_X = 30.0
_ASYMPTOTIC_MAX_TERMS = 80

# 梯形积分：相对截断阈值与加密次数
_TRAPEZOID_LOG_CUTOFF = 40.0
_TRAPEZOID_INITIAL_STEP = 0.25
_TRAPEZOID_MAX_HALVINGS = 14
_TRAPEZOID_REL_TOL = 1e-14

# J₀：|x| ≤ 25 用周期梯形公式，之外用 Hankel 渐近展开
_J0_SMALL_LIMIT = 25.0
_J0_TRAPEZOID_NODES = 64
_J0_ASYMPTOTIC_TERMS = 24


class BesselKResult(NamedTuple):
    """K_ν(x) 的计算结果"""
    value: float
    underflow: bool


def bessel_k(nu: float, x: float) -> float:
    """
    第二类修正 Bessel 函数 K_ν(x)

    Args:
        nu: 阶数，ν ≥ 0
        x: 自变量，x > 0

    Returns:
        float: K_ν(x)；下溢时返回 0.0
    """
    return bessel_k_ex(nu, x).value


def bessel_k_ex(nu: float, x: float) -> BesselKResult:
    """
    第二类修正 Bessel 函数 K_ν(x)，同时返回下溢标记

    Args:
        nu: 阶数，ν ≥ 0
        x: 自变量，x > 0

    Returns:
        BesselKResult: (value, underflow)
    """
    if not math.isfinite(nu) or nu < 0.0:
        raise DomainError("Bessel K 的阶数必须为非负有限实数", details={"nu": nu})
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError("Bessel K 的自变量必须为正有限实数", details={"x": x})

    log_value = log_scaled_bessel_k(nu, x) - x
    if log_value < _LOG_TINY:
        logger.debug("Bessel K 下溢", nu=nu, x=x, log_value=log_value)
        return BesselKResult(0.0, True)
    return BesselKResult(math.exp(log_value), False)


def log_scaled_bessel_k(nu: float, x: float) -> float:
    """ln(e^x·K_ν(x))，不做参数检查"""
    half_integer = math.floor(nu) + 0.5
    if abs(nu - half_integer) < 1e-12:
        # 半整数阶：渐近级数在有限项后终止，结果精确
        return _log_asymptotic(half_integer, x, int(round(half_integer - 0.5)))
    if x >= _ASYMPTOTIC_MIN_X and 4.0 * nu * nu <= 2.0 * x:
        return _log_asymptotic(nu, x, None)
    return _log_trapezoid(nu, x)


def _log_asymptotic(nu: float, x: float, last_term: Union[int, None]) -> float:
    """
    √(π/2x)·Σ t_k，t_k = t_{k−1}(4ν² − (2k−1)²)/(8kx)

    last_term 非空时级数恰好终止于该项。
    """
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    limit = last_term if last_term is not None else _ASYMPTOTIC_MAX_TERMS
    for k in range(1, limit + 1):
        previous = abs(term)
        term *= (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if last_term is None:
            if abs(term) <= 1e-17 * abs(total):
                break
            if (2 * k - 1) ** 2 > mu and abs(term) > previous:
                break
        total += term
    return 0.5 * math.log(math.pi / (2.0 * x)) + math.log(total)


def _log_cosh(y: np.ndarray) -> np.ndarray:
    return y + np.log1p(np.exp(-2.0 * y)) - _LN2


def _log_integrand(nu: float, x: float, t: np.ndarray) -> np.ndarray:
    """ln[e^{−x(cosh t − 1)}·cosh(νt)]"""
    half = np.sinh(0.5 * t)
    return -2.0 * x * half * half + _log_cosh(nu * t)


def _log_trapezoid(nu: float, x: float) -> float:
    """
    e^x·K_ν(x) = ∫₀^∞ e^{−x(cosh t − 1)} cosh(νt) dt

    被积函数关于 t 为偶函数且解析，梯形公式指数收敛；步长逐次减半直到
    相邻两次结果的相对差小于 _TRAPEZOID_REL_TOL。
    """
    peak = math.asinh(nu / x) if nu > 0.0 else 0.0
    log_peak = float(_log_integrand(nu, x, np.array([peak]))[0])

    upper = peak + 1.0
    while float(_log_integrand(nu, x, np.array([upper]))[0]) > log_peak - _TRAPEZOID_LOG_CUTOFF:
        upper += max(1.0, 0.5 * upper)

    step = _TRAPEZOID_INITIAL_STEP
    nodes = np.arange(0.0, upper + step, step)
    weights = np.exp(_log_integrand(nu, x, nodes) - log_peak)
    estimate = step * (weights.sum() - 0.5 * weights[0])

    for _ in range(_TRAPEZOID_MAX_HALVINGS):
        step *= 0.5
        midpoints = np.arange(step, upper + step, 2.0 * step)
        refined = 0.5 * estimate + step * np.exp(_log_integrand(nu, x, midpoints) - log_peak).sum()
        if abs(refined - estimate) <= _TRAPEZOID_REL_TOL * refined:
            return math.log(refined) + log_peak
        estimate = refined

    logger.warning("Bessel K 梯形积分未达到目标精度", nu=nu, x=x)
    return math.log(estimate) + log_peak


def bessel_j0(x: ArrayLike) -> ArrayLike:
    """
    第一类零阶 Bessel 函数 J₀(x)，支持标量与 numpy 数组

    Args:
        x: 任意有限实数

    Returns:
        J₀(x)，形状与输入相同
    """
    arr = np.abs(np.asarray(x, dtype=float))
    out = np.empty_like(arr)

    small = arr <= _J0_SMALL_LIMIT
    if np.any(small):
        out[small] = _j0_trapezoid(arr[small])
    if not np.all(small):
        out[~small] = _j0_asymptotic(arr[~small])

    if np.ndim(x) == 0:
        return float(out)
    return out


def _j0_trapezoid(x: np.ndarray) -> np.ndarray:
    """J₀(x) = (1/π)∫₀^π cos(x sin t) dt，周期被积函数的等距梯形公式"""
    t = np.arange(_J0_TRAPEZOID_NODES) * (math.pi / _J0_TRAPEZOID_NODES)
    return np.cos(np.multiply.outer(x, np.sin(t))).mean(axis=-1)


def _j0_asymptotic(x: np.ndarray) -> np.ndarray:
    """J₀(x) = √(2/(πx))·[P(x)cos χ − Q(x)sin χ]，χ = x − π/4"""
    p = np.ones_like(x)
    q = np.zeros_like(x)
    coefficient = 1.0
    power = np.ones_like(x)
    for k in range(1, _J0_ASYMPTOTIC_TERMS + 1):
        coefficient *= -((2 * k - 1) ** 2) / (8.0 * k)
        power = power / x
        if k % 2 == 1:
            q += (-1) ** ((k - 1) // 2) * coefficient * power
        else:
            p += (-1) ** (k // 2) * coefficient * power
    chi = x - 0.25 * math.pi
    return np.sqrt(2.0 / (math.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def bessel_j0_zeros(count: int) -> np.ndarray:
    """
    J₀ 的前 count 个正零点（McMahon 渐近近似）

    仅用于振荡积分的分段点，精度约 1e-3（首个零点）并随序号迅速提高。
    """
    s = np.arange(1, count + 1, dtype=float)
    b = (s - 0.25) * math.pi
    return b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b ** 3) + 3779.0 / (15360.0 * b ** 5)
