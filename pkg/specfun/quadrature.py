# -*- coding: utf-8 -*-
"""
自适应 Gauss–Kronrod (7/15) 数值积分

全局自适应：每次二分当前误差最大的子区间，直到总误差满足
max(abs_tol, rel_tol·|result|)。子区间按 (−误差, 左端点) 排序，
节点位置完全确定，因此相同输入得到逐位相同的结果。

被积函数 f 接收 numpy 数组（一组节点）并返回同形状的数组。
"""

import heapq
import math
from typing import Callable, List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field

from utils.error_handler import ConvergenceError, DomainError

logger = structlog.get_logger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

_MAX_INTERVALS = 20000

# QUADPACK qk15 节点与权重
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_WEIGHTS = np.zeros(15)
_GAUSS_WEIGHTS[[1, 13]] = _WG[0]
_GAUSS_WEIGHTS[[3, 11]] = _WG[1]
_GAUSS_WEIGHTS[[5, 9]] = _WG[2]
_GAUSS_WEIGHTS[7] = _WG[3]


class QuadratureSpec(BaseModel):
    """数值积分控制参数"""
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-12, gt=0, description="绝对误差容限")
    rel_tol: float = Field(default=1e-12, gt=0, description="相对误差容限")
    max_depth: int = Field(default=40, ge=1, description="最大二分深度")

    def tolerance(self, value: float) -> float:
        """给定积分值时的目标误差"""
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_QUADRATURE = QuadratureSpec()


def _evaluate(f: Integrand, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(f(nodes), dtype=float)
    return np.broadcast_to(values, nodes.shape)


def _gk15(f: Integrand, lo: float, hi: float) -> Tuple[float, float]:
    """单个区间上的 Kronrod 估计及 |K − G| 误差估计"""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    values = _evaluate(f, center + half * _NODES)
    kronrod = half * float(values @ _KRONROD_WEIGHTS)
    gauss = half * float(values @ _GAUSS_WEIGHTS)
    return kronrod, abs(kronrod - gauss)


def integrate(f: Integrand, lo: float, hi: float,
              spec: Optional[QuadratureSpec] = None) -> float:
    """
    全局自适应 Gauss–Kronrod 积分

    Args:
        f: 向量化被积函数
        lo: 积分下限
        hi: 积分上限，lo ≤ hi
        spec: 积分控制参数，默认 DEFAULT_QUADRATURE

    Returns:
        float: 积分估计值

    Raises:
        DomainError: lo > hi 或端点非有限
        ConvergenceError: 超过 max_depth 或子区间数上限仍未满足容差
    """
    spec = spec or DEFAULT_QUADRATURE
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("积分端点必须有限", details={"lo": lo, "hi": hi})
    if lo > hi:
        raise DomainError("积分下限大于上限", details={"lo": lo, "hi": hi})
    if lo == hi:
        return 0.0

    value, error = _gk15(f, lo, hi)
    heap: List[Tuple[float, float, float, float, int]] = [(-error, lo, hi, value, 0)]
    total_error = error
    total_value = value

    while total_error > spec.tolerance(total_value):
        neg_error, a, b, interval_value, depth = heapq.heappop(heap)
        if depth >= spec.max_depth or len(heap) >= _MAX_INTERVALS:
            logger.warning("自适应积分未收敛", lo=lo, hi=hi, depth=depth,
                           intervals=len(heap) + 1, error=total_error)
            raise ConvergenceError(
                "自适应积分未收敛",
                details={"lo": lo, "hi": hi, "depth": depth, "error": total_error},
            )

        mid = 0.5 * (a + b)
        left_value, left_error = _gk15(f, a, mid)
        right_value, right_error = _gk15(f, mid, b)
        heapq.heappush(heap, (-left_error, a, mid, left_value, depth + 1))
        heapq.heappush(heap, (-right_error, mid, b, right_value, depth + 1))

        total_value += left_value + right_value - interval_value
        total_error += left_error + right_error + neg_error

    return math.fsum(item[3] for item in heap)


def integrate_panels(f: Integrand, breakpoints: np.ndarray,
                     spec: Optional[QuadratureSpec] = None) -> float:
    """
    分段积分：适用于在已知零点之间振荡的被积函数

    所有分段一次性向量化地用 G7K15 求值；误差超过按长度分配的容差的
    分段再交给 integrate 自适应细分。

    Args:
        f: 向量化被积函数
        breakpoints: 递增的分段点（含两个端点）
        spec: 积分控制参数

    Returns:
        float: 各分段积分之和
    """
    spec = spec or DEFAULT_QUADRATURE
    points = np.asarray(breakpoints, dtype=float)
    lo = points[:-1]
    hi = points[1:]
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]
    if lo.size == 0:
        return 0.0

    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    values = _evaluate(f, center[:, None] + half[:, None] * _NODES[None, :])
    kronrod = half * (values @ _KRONROD_WEIGHTS)
    errors = np.abs(kronrod - half * (values @ _GAUSS_WEIGHTS))

    total_length = float(hi[-1] - lo[0])
    target = spec.tolerance(math.fsum(kronrod))
    budgets = target * (hi - lo) / total_length

    rejected = np.nonzero(errors > budgets)[0]
    if rejected.size:
        logger.debug("分段积分细化", panels=int(lo.size), rejected=int(rejected.size))
    for i in rejected:
        local = QuadratureSpec(abs_tol=float(budgets[i]), rel_tol=spec.rel_tol,
                               max_depth=spec.max_depth)
        kronrod[i] = integrate(f, float(lo[i]), float(hi[i]), local)

    return math.fsum(kronrod)
