# -*- coding: utf-8 -*-
"""
信干噪比计算

γ = (D₀² + h²)^{−β}·ρ(D₀) / (𝕀 + Ω)

干扰近似值（有限视场闭式在低阶时可能为负）先截断为 max(𝕀, 0) 再参与计算。

所有功率都已按平均发射光功率 P_o 归一化，P_o 只通过 Ω 出现。
"""

import math
from dataclasses import dataclass
from typing import Optional, Union

import structlog

from channel.gain import fov_indicator, path_loss_term
from channel.params import NetworkParams, NoiseParams
from field.field1d import interference_1d
from field.field2d import interference_2d
from field.results import FovInclusion, GridIndexSet, InterferenceMethod, InterferenceResult
from specfun.quadrature import DEFAULT_QUADRATURE, QuadratureSpec

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SinrResult:
    """SINR 计算结果"""
    sinr_linear: float
    sinr_db: float
    signal_term: float
    interference_term: float
    omega: float
    in_fov: bool
    unbounded: bool
    interference: InterferenceResult

    def to_dict(self) -> dict:
        return {
            "sinr": self.sinr_linear,
            "sinr_db": self.sinr_db,
            "signal_term": self.signal_term,
            "interference_term": self.interference_term,
            "omega": self.omega,
            "in_fov": self.in_fov,
            "unbounded": self.unbounded,
        }


def omega(net: NetworkParams, noise: NoiseParams) -> float:
    """
    归一化噪声常数 Ω = 4π²N₀W / (P_o²(m+1)²A_pd²R_pd²h^{2m+2})

    N₀ 的单位按给定值存储，Ω 的单位随之吸收该约定。
    """
    m = net.m
    denominator = (net.optical_power ** 2 * (m + 1.0) ** 2 * net.pd_area ** 2
                   * net.responsivity ** 2 * net.h ** (2.0 * m + 2.0))
    return 4.0 * math.pi ** 2 * noise.variance / denominator


def _to_db(value: float) -> float:
    if value == 0.0:
        return -math.inf
    if math.isinf(value):
        return math.inf
    return 10.0 * math.log10(value)


def _assemble(net: NetworkParams, noise: NoiseParams, distance: float,
              interference: InterferenceResult) -> SinrResult:
    in_fov = bool(fov_indicator(distance, net.h, net.theta_f))
    signal = path_loss_term(net, distance * distance)
    noise_term = omega(net, noise)
    numerator = signal if in_fov else 0.0
    # 有限视场闭式在低阶时可能为负，干扰功率按 0 截断
    interference_power = max(interference.value, 0.0)
    if interference.value < 0.0:
        logger.warning("干扰近似值为负，按 0 计入 SINR", value=interference.value,
                       method=interference.method.value, terms_used=interference.terms_used)
    denominator = interference_power + noise_term

    unbounded = False
    if denominator <= 0.0:
        if numerator > 0.0:
            unbounded = True
            linear = math.inf
            logger.warning("SINR 分母为零，结果为无穷大", distance=distance, theta_f=net.theta_f)
        else:
            linear = 0.0
    else:
        linear = numerator / denominator

    return SinrResult(
        sinr_linear=linear,
        sinr_db=_to_db(linear),
        signal_term=signal,
        interference_term=interference_power,
        omega=noise_term,
        in_fov=in_fov,
        unbounded=unbounded,
        interference=interference,
    )


def sinr_1d(net: NetworkParams, noise: NoiseParams, z: float,
            method: InterferenceMethod = InterferenceMethod.CLOSED_FORM,
            order: Optional[int] = None,
            spec: QuadratureSpec = DEFAULT_QUADRATURE) -> SinrResult:
    """
    一维网络中位置 z 处的 SINR

    Args:
        net: 网络参数
        noise: 噪声参数
        z: 接收机位置
        method: 干扰计算方法
        order: ORACLE 时为 n，闭式方法时为 k
    """
    interference = interference_1d(net, z, method, order, spec)
    result = _assemble(net, noise, z, interference)
    logger.debug("一维 SINR", z=z, method=interference.method.value, sinr=result.sinr_linear)
    return result


def sinr_2d(net: NetworkParams, noise: NoiseParams, dx: float, dy: float,
            method: InterferenceMethod = InterferenceMethod.CLOSED_FORM,
            index_set: Optional[Union[int, GridIndexSet]] = None,
            inclusion: FovInclusion = FovInclusion.RADIAL,
            spec: QuadratureSpec = DEFAULT_QUADRATURE) -> SinrResult:
    """二维网络中偏移 (dx, dy) 处的 SINR"""
    interference = interference_2d(net, dx, dy, method, index_set, inclusion, spec)
    result = _assemble(net, noise, math.hypot(dx, dy), interference)
    logger.debug("二维 SINR", dx=dx, dy=dy, method=interference.method.value, sinr=result.sinr_linear)
    return result
