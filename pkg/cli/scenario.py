# -*- coding: utf-8 -*-
"""
命令行场景配置

一个场景描述：网络模型（一维/二维）、网络与噪声参数、计算位置（位置列表或参数扫描二选一）、
干扰计算方法及其阶数、输出位置与格式。
"""

import math
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from channel.params import NetworkParams, NoiseParams
from config import QuadratureConfig
from field.results import FieldPoint, FovInclusion, GridIndexSet, InterferenceMethod
from utils.error_handler import ConfigurationError


class ModelKind(str, Enum):
    """网络模型"""
    ONE_D = "1d"
    TWO_D = "2d"


class OutputFormat(str, Enum):
    """输出格式"""
    CSV = "csv"
    JSON = "json"


class SweepParam(str, Enum):
    """可扫描参数"""
    Z = "z"
    DX = "dx"
    DY = "dy"
    R = "r"
    H = "h"
    A = "a"
    HPSA = "hpsa"
    FOV = "fov"
    N = "n"
    K = "k"

    @property
    def is_position(self) -> bool:
        return self in (SweepParam.Z, SweepParam.DX, SweepParam.DY, SweepParam.R)

    @property
    def is_angle(self) -> bool:
        return self in (SweepParam.HPSA, SweepParam.FOV)


class SweepSpec(BaseModel):
    """参数扫描 lo + i·step，i = 0..N，N = ⌊(hi − lo)/step⌋"""
    model_config = ConfigDict(frozen=True)

    param: SweepParam = Field(..., description="扫描参数")
    lo: float = Field(..., description="起点")
    hi: float = Field(..., description="终点（包含，若落在网格上）")
    step: float = Field(..., gt=0, description="步长")

    @model_validator(mode='after')
    def check_range(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or self.hi < self.lo:
            raise ValueError(f'扫描范围为空: {self.lo}..{self.hi}')
        return self

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        """解析 PARAM:LO:HI:STEP"""
        parts = text.split(':')
        if len(parts) != 4:
            raise ConfigurationError(f"扫描格式应为 PARAM:LO:HI:STEP: {text}")
        param, lo, hi, step = parts
        try:
            return cls(param=param.strip().lower(), lo=float(lo), hi=float(hi), step=float(step))
        except ValueError as e:
            raise ConfigurationError(f"无法解析扫描参数: {text}", cause=e)

    def values(self) -> List[float]:
        """扫描网格，取值四舍五入到 12 位小数以保证跨平台一致"""
        count = int(math.floor((self.hi - self.lo) / self.step + 1e-9))
        values = [round(self.lo + i * self.step, 12) for i in range(count + 1)]
        if not values:
            raise ConfigurationError("扫描范围为空", details={"sweep": self.model_dump(mode='json')})
        return values

    def to_radians(self) -> "SweepSpec":
        if not self.param.is_angle:
            return self
        return SweepSpec(param=self.param, lo=math.radians(self.lo),
                         hi=math.radians(self.hi), step=math.radians(self.step))


class PositionSpec(BaseModel):
    """接收机位置：一维用 z，二维用 (dx, dy)"""
    model_config = ConfigDict(frozen=True)

    z: Optional[float] = Field(default=None, description="一维位置 (m)")
    dx: Optional[float] = Field(default=None, description="二维 x 偏移 (m)")
    dy: Optional[float] = Field(default=None, description="二维 y 偏移 (m)")

    def point(self, model: ModelKind) -> FieldPoint:
        if model == ModelKind.ONE_D:
            return FieldPoint.one_d(self.z or 0.0)
        return FieldPoint.two_d(self.dx or 0.0, self.dy or 0.0)


class OrderSpec(BaseModel):
    """阶数：oracle 的窗口 n，一维闭式的 k，二维闭式的 (j, l)"""
    model_config = ConfigDict(frozen=True)

    n: Optional[int] = Field(default=None, ge=1, description="求和窗口半宽")
    k: Optional[int] = Field(default=None, ge=0, le=64, description="一维谱项数")
    jl: Optional[Tuple[int, int]] = Field(default=None, description="二维下标集合 [0,j]×[0,l]")

    @field_validator('jl')
    @classmethod
    def validate_jl(cls, v):
        if v is not None and (v[0] < 0 or v[1] < 0 or v[0] > 64 or v[1] > 64):
            raise ValueError('j、l 必须位于 [0, 64]')
        return v

    @classmethod
    def parse_jl(cls, text: str) -> Tuple[int, int]:
        """解析 J,L"""
        try:
            j, l = (int(part) for part in text.split(','))
        except ValueError as e:
            raise ConfigurationError(f"--jl 格式应为 J,L: {text}", cause=e)
        return j, l


class OutputSpec(BaseModel):
    """输出位置与格式；path 为空时写标准输出"""
    path: Optional[str] = Field(default=None, description="输出文件路径")
    format: OutputFormat = Field(default=OutputFormat.CSV, description="输出格式")


class ScenarioConfig(BaseModel):
    """一次命令运行的完整场景"""
    model: ModelKind = Field(default=ModelKind.ONE_D, description="网络模型")
    network: NetworkParams = Field(default_factory=NetworkParams, description="网络参数")
    noise: Optional[NoiseParams] = Field(default=None, description="噪声参数，sinr 命令缺省时使用器件默认值")
    positions: Optional[List[PositionSpec]] = Field(default=None, description="位置列表")
    sweep: Optional[SweepSpec] = Field(default=None, description="参数扫描")
    at: PositionSpec = Field(default_factory=PositionSpec, description="扫描非位置参数时的固定位置")
    relative_position: Optional[float] = Field(
        default=None, ge=0,
        description="以 a 为单位的固定位置（一维 z = c·a，二维 dx = dy = c·a），随 a 扫描而变化",
    )
    method: InterferenceMethod = Field(default=InterferenceMethod.CLOSED_FORM, description="干扰计算方法")
    order: OrderSpec = Field(default_factory=OrderSpec, description="阶数")
    inclusion: FovInclusion = Field(default=FovInclusion.RADIAL, description="二维视场求和的纳入规则")
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig, description="数值积分配置")
    output: OutputSpec = Field(default_factory=OutputSpec, description="输出")
    threads: int = Field(default=1, ge=1, le=64, description="工作线程数")

    @model_validator(mode='after')
    def check_consistency(self):
        if (self.positions is None) == (self.sweep is None):
            raise ValueError('位置列表与参数扫描必须且只能给出一个')
        if self.positions is not None and not self.positions:
            raise ValueError('位置列表为空')

        one_d = self.model == ModelKind.ONE_D
        for position in self.positions or []:
            if one_d and (position.dx is not None or position.dy is not None):
                raise ValueError('一维模型的位置只能给出 z')
            if not one_d and position.z is not None:
                raise ValueError('二维模型的位置应给出 dx、dy')

        order = self.order
        if self.method == InterferenceMethod.ORACLE:
            if order.k is not None or order.jl is not None:
                raise ValueError('oracle 方法只接受 n')
        elif self.method == InterferenceMethod.FOV_ORACLE:
            if order.n is not None or order.k is not None or order.jl is not None:
                raise ValueError('fov_oracle 方法不接受阶数')
        else:
            if order.n is not None:
                raise ValueError('闭式方法不接受 n')
            if one_d and order.jl is not None:
                raise ValueError('一维模型使用 k 而不是 (j, l)')
            if not one_d and order.k is not None:
                raise ValueError('二维模型使用 (j, l) 而不是 k')

        if self.sweep is not None:
            param = self.sweep.param
            if one_d and param in (SweepParam.DX, SweepParam.DY, SweepParam.R):
                raise ValueError(f'一维模型不能扫描 {param.value}')
            if param == SweepParam.N and self.method != InterferenceMethod.ORACLE:
                raise ValueError('只有 oracle 方法可以扫描 n')
            if param == SweepParam.K and (not one_d or self.method.is_oracle):
                raise ValueError('只有一维闭式方法可以扫描 k')
        return self

    def index_set(self) -> Optional[GridIndexSet]:
        if self.order.jl is None:
            return None
        return GridIndexSet(j=self.order.jl[0], l=self.order.jl[1])
