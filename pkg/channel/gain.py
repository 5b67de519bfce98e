# -*- coding: utf-8 -*-
"""
Lambertian 视距信道增益与视场约束
"""

import math
from typing import Union

import numpy as np
import structlog

from channel.params import HALF_PI, NetworkParams

logger = structlog.get_logger(__name__)

ArrayLike = Union[float, np.ndarray]


def fov_indicator(D: float, h: float, theta_f: float) -> int:
    """
    视场约束函数 ρ(D)

    Args:
        D: 地面上 LED 与接收机的（有符号）距离
        h: LED 高度
        theta_f: 接收机视场角

    Returns:
        int: |D| ≤ h·tan θ_f 时为 1（边界计入），否则为 0；θ_f = π/2 恒为 1
    """
    if theta_f >= HALF_PI:
        return 1
    return 1 if abs(D) <= h * math.tan(theta_f) else 0


def fov_mask(D: np.ndarray, h: float, theta_f: float) -> np.ndarray:
    """fov_indicator 的向量化版本，返回布尔数组"""
    D = np.asarray(D, dtype=float)
    if theta_f >= HALF_PI:
        return np.ones(D.shape, dtype=bool)
    return np.abs(D) <= h * math.tan(theta_f)


def channel_gain(params: NetworkParams, D: float) -> float:
    """
    LED 到光电二极管的信道增益

    G = (m+1)·A_pd·h^{m+1}/(2π)·(D² + h²)^{−(m+3)/2}·ρ(D)
    """
    if not fov_indicator(D, params.h, params.theta_f):
        logger.debug("LED 不在视场内，增益为 0", D=D, theta_f=params.theta_f)
        return 0.0
    m = params.m
    h = params.h
    return (m + 1.0) * params.pd_area * h ** (m + 1.0) / (2.0 * math.pi) \
        * (D * D + h * h) ** (-0.5 * (m + 3.0))


def path_loss_term(params: NetworkParams, distance_sq: ArrayLike) -> ArrayLike:
    """
    归一化接收功率 (D² + h²)^{−β}，不含视场约束

    Args:
        params: 网络参数
        distance_sq: 地面距离的平方 D²（标量或数组）
    """
    return (distance_sq + params.h * params.h) ** (-params.beta)
