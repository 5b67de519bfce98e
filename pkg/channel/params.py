# -*- coding: utf-8 -*-
"""
系统参数容器：网络几何、LED 光学、接收机与噪声参数

所有量使用 SI 单位（米、瓦、赫兹、弧度）。
"""

import math
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from utils.error_handler import DomainError

logger = structlog.get_logger(__name__)

HALF_PI = 0.5 * math.pi


class DerivedOptics(BaseModel):
    """由 LED 半功率半角导出的光学参数"""
    model_config = ConfigDict(frozen=True)

    m: float = Field(..., gt=0, description="Lambertian 发射阶数")
    beta: float = Field(..., gt=3, description="路径损耗指数参数 β = m + 3")


def lambertian_order(theta_h: float) -> DerivedOptics:
    """
    由半功率半角计算 Lambertian 阶数 m = −ln2 / ln cos θ_h

    Args:
        theta_h: 半功率半角，0 < θ_h < π/2

    Returns:
        DerivedOptics: (m, β = m + 3)
    """
    if not math.isfinite(theta_h) or theta_h <= 0.0 or theta_h >= HALF_PI:
        raise DomainError("半功率半角必须位于 (0, π/2)", details={"theta_h": theta_h})

    log_cos = math.log(math.cos(theta_h))
    if log_cos == 0.0:
        raise DomainError("半功率半角过小，Lambertian 阶数发散", details={"theta_h": theta_h})
    m = -math.log(2.0) / log_cos
    if not math.isfinite(m):
        raise DomainError("Lambertian 阶数不是有限值", details={"theta_h": theta_h})
    logger.debug("Lambertian 阶数", theta_h=theta_h, m=m)
    return DerivedOptics(m=m, beta=m + 3.0)


class NetworkParams(BaseModel):
    """网络参数：默认值为 h=2.5m、a=0.5m、θ_h=π/3 的标准验证点及典型器件参数"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    h: float = Field(default=2.5, gt=0, description="LED 安装高度 (m)")
    a: float = Field(default=0.5, gt=0, description="LED 间距/小区尺寸 (m)")
    theta_h: float = Field(default=math.pi / 3, description="LED 半功率半角 (rad)")
    theta_f: float = Field(default=HALF_PI, description="接收机视场角 (rad)")
    pd_area: float = Field(default=1e-4, gt=0, alias="A_pd", description="光电二极管面积 (m²)")
    responsivity: float = Field(default=0.1, gt=0, alias="R_pd", description="光电二极管响应度 (A/W)")
    optical_power: float = Field(default=1.0, gt=0, alias="P_o", description="平均发射光功率 (W)")

    _optics: DerivedOptics = PrivateAttr()

    @field_validator('theta_h')
    @classmethod
    def validate_theta_h(cls, v):
        try:
            lambertian_order(v)
        except DomainError as e:
            raise ValueError(e.message)
        return v

    @field_validator('theta_f')
    @classmethod
    def validate_theta_f(cls, v):
        if not math.isfinite(v) or v <= 0.0 or v > HALF_PI:
            raise ValueError('视场角必须位于 (0, π/2]')
        return v

    def model_post_init(self, __context: Any) -> None:
        self._optics = lambertian_order(self.theta_h)

    @property
    def optics(self) -> DerivedOptics:
        return self._optics

    @property
    def m(self) -> float:
        return self._optics.m

    @property
    def beta(self) -> float:
        return self._optics.beta

    @property
    def unrestricted_fov(self) -> bool:
        """θ_f = π/2：所有 LED 都在视场内"""
        return self.theta_f >= HALF_PI

    @property
    def fov_radius(self) -> float:
        """视场在地面上的半径 h·tan θ_f，θ_f = π/2 时为 +∞"""
        if self.unrestricted_fov:
            return math.inf
        return self.h * math.tan(self.theta_f)

    def replace(self, **changes: Any) -> "NetworkParams":
        """返回修改部分字段后重新校验的副本"""
        return type(self).model_validate({**self.model_dump(), **changes})


class NoiseParams(BaseModel):
    """接收机噪声参数"""
    model_config = ConfigDict(frozen=True)

    N0: float = Field(default=4.14e-21, ge=0, description="噪声功率谱密度 (W/Hz)")
    W: float = Field(default=40e6, gt=0, description="LED 调制带宽 (Hz)")
    T: float = Field(default=300.0, gt=0, description="温度 (K)，仅作记录")

    @property
    def variance(self) -> float:
        """总噪声方差 σ² = N₀W"""
        return self.N0 * self.W
