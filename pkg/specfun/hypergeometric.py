# -*- coding: utf-8 -*-
"""
超几何函数 ₂F₁(½, β; 3/2; −t²)

该特例等于 (1/t)∫₀^t (1+y²)^{−β} dy。自变量 −t² 总是非正，
先用 Pfaff 变换映射到 u = t²/(1+t²) ∈ [0, 1)：
  u ≤ ½ 时直接对 ₂F₁(1, β; 3/2; u) 做幂级数；
  u > ½ 时用 ∫₀^∞ 减去尾积分，尾积分按 c² = 1/(1+t²) < ½ 展开。
"""

import math

import structlog

from specfun.gamma import gamma
from utils.error_handler import ConvergenceError, DomainError

logger = structlog.get_logger(__name__)

_MAX_TERMS = 2000
_EPS = 1e-17


def hyp2f1_half(beta: float, t: float) -> float:
    """
    ₂F₁(0.5, β; 1.5; −t²)

    Args:
        beta: β > 1
        t: t = tan θ_f ≥ 0

    Returns:
        float: 超几何函数值，相对误差约 1e-14
    """
    if not math.isfinite(beta) or beta <= 1.0:
        raise DomainError("hyp2f1_half 要求 β > 1", details={"beta": beta})
    if not math.isfinite(t) or t < 0.0:
        raise DomainError("hyp2f1_half 要求 t ≥ 0 且有限", details={"t": t})

    if t == 0.0:
        return 1.0

    t2 = t * t
    u = t2 / (1.0 + t2)
    if u <= 0.5:
        return (1.0 + t2) ** (-beta) * _pfaff_series(beta, u)

    c2 = 1.0 / (1.0 + t2)
    full = math.sqrt(math.pi) * gamma(beta - 0.5) / (2.0 * gamma(beta))
    tail = c2 ** (beta - 0.5) / (2.0 * beta - 1.0) * _tail_series(beta, c2)
    return (full - tail) / t


def _pfaff_series(beta: float, u: float) -> float:
    """Σ (β)_n/(3/2)_n·uⁿ，各项为正"""
    term = 1.0
    total = 1.0
    for n in range(_MAX_TERMS):
        term *= (beta + n) / (1.5 + n) * u
        total += term
        if term < _EPS * total and n > beta:
            return total
    raise ConvergenceError("Pfaff 级数未收敛", details={"beta": beta, "u": u})


def _tail_series(beta: float, c2: float) -> float:
    """Σ (½)_n(β−½)_n/((β+½)_n·n!)·c²ⁿ，即 ₂F₁(β−½, ½; β+½; c²)"""
    term = 1.0
    total = 1.0
    for n in range(_MAX_TERMS):
        term *= (0.5 + n) * (beta - 0.5 + n) / ((beta + 0.5 + n) * (n + 1.0)) * c2
        total += term
        if term < _EPS * total:
            return total
    raise ConvergenceError("尾部级数未收敛", details={"beta": beta, "c2": c2})
