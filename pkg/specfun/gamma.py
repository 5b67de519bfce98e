# -*- coding: utf-8 -*-
"""
Gamma 函数与上不完全 Gamma 函数

上不完全 Gamma 函数在 x < s+1 时使用级数，否则使用修正 Lentz 连分式，
两种表示均来自 Numerical Recipes 第 6 章。
"""

import math
import sys

import structlog

from utils.error_handler import ConvergenceError, DomainError

logger = structlog.get_logger(__name__)

_EPS = sys.float_info.epsilon
_FPMIN = 1e-300
_MAX_ITERATIONS = 500


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} 必须为正的有限实数", details={name: value})


def gamma(x: float) -> float:
    """
    Γ(x)，仅接受正实数

    Args:
        x: 自变量，x > 0

    Returns:
        float: Γ(x)
    """
    _require_positive("x", x)
    try:
        return math.gamma(x)
    except OverflowError as e:
        raise DomainError("Γ(x) 超出浮点表示范围", details={"x": x}, cause=e)


def log_gamma(x: float) -> float:
    """ln Γ(x)，x > 0"""
    _require_positive("x", x)
    return math.lgamma(x)


def upper_incomplete_gamma(s: float, x: float) -> float:
    """
    上不完全 Gamma 函数 Γ(s, x) = ∫_x^∞ t^{s−1} e^{−t} dt

    Args:
        s: 形状参数，s > 0
        x: 下限，x ≥ 0

    Returns:
        float: Γ(s, x)，相对误差约 1e-13
    """
    _require_positive("s", s)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError("x 必须为非负有限实数", details={"x": x})

    if x == 0.0:
        return gamma(s)
    if x < s + 1.0:
        return gamma(s) - _lower_series(s, x)
    return _upper_continued_fraction(s, x)


def _prefactor(s: float, x: float) -> float:
    """e^{−x} x^s，在对数域计算以避免溢出"""
    return math.exp(-x + s * math.log(x))


def _lower_series(s: float, x: float) -> float:
    """下不完全 Gamma 函数 γ(s, x) 的级数表示"""
    term = 1.0 / s
    total = term
    ap = s
    for _ in range(_MAX_ITERATIONS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * _prefactor(s, x)

    logger.warning("不完全Gamma级数未收敛", s=s, x=x)
    raise ConvergenceError("不完全Gamma级数未收敛", details={"s": s, "x": x})


def _upper_continued_fraction(s: float, x: float) -> float:
    """Γ(s, x) 的连分式表示（修正 Lentz 算法）"""
    b = x + 1.0 - s
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return _prefactor(s, x) * h

    logger.warning("不完全Gamma连分式未收敛", s=s, x=x)
    raise ConvergenceError("不完全Gamma连分式未收敛", details={"s": s, "x": x})
