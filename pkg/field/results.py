# -*- coding: utf-8 -*-
"""
干扰计算结果与辅助类型
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from utils.error_handler import DomainError


class InterferenceMethod(str, Enum):
    """干扰计算方法"""
    ORACLE = "oracle"
    CLOSED_FORM = "closed_form"
    FOV_CLOSED_FORM = "fov_closed_form"
    FOV_ORACLE = "fov_oracle"

    @property
    def is_fov(self) -> bool:
        return self in (InterferenceMethod.FOV_CLOSED_FORM, InterferenceMethod.FOV_ORACLE)

    @property
    def is_oracle(self) -> bool:
        return self in (InterferenceMethod.ORACLE, InterferenceMethod.FOV_ORACLE)


class FovInclusion(str, Enum):
    """二维视场截断时格点的纳入规则"""
    RADIAL = "radial"   # 欧氏距离 D ≤ h·tan θ_f
    RING = "ring"       # 方环 max(|u|,|v|)·a ≤ h·tan θ_f


@dataclass(frozen=True)
class ErrorDiagnostics:
    """截断误差诊断量（渐近形状，不是严格上界）"""
    k_min_rule: int
    envelope: float
    tail_gamma_bound: float
    term_peak_w0: float
    order: float

    @property
    def satisfies_rule(self) -> bool:
        """截断阶数是否满足选取规则"""
        return self.order >= self.k_min_rule


@dataclass(frozen=True)
class InterferenceResult:
    """归一化干扰功率 (1/m^{2β})"""
    value: float
    method: InterferenceMethod
    terms_used: int
    error_envelope: Optional[float] = None
    diagnostics: Optional[ErrorDiagnostics] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method.value,
            "terms_used": self.terms_used,
            "error_envelope": self.error_envelope,
        }


@dataclass(frozen=True)
class FieldPoint:
    """接收机位置：一维时只有 x (= z)，二维时为 (dx, dy)"""
    x: float
    y: Optional[float] = None

    @classmethod
    def one_d(cls, z: float) -> "FieldPoint":
        return cls(x=z)

    @classmethod
    def two_d(cls, dx: float, dy: float) -> "FieldPoint":
        return cls(x=dx, y=dy)

    @property
    def is_2d(self) -> bool:
        return self.y is not None

    @property
    def radial(self) -> float:
        """到标记 LED 正下方的地面距离"""
        if self.y is None:
            return abs(self.x)
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class GridIndexSet:
    """谱项下标集合 𝔸 = ([0,j]×[0,l] ∩ ℤ²) ∖ {(0,0)}"""
    j: int
    l: int

    def __post_init__(self):
        if self.j < 0 or self.l < 0:
            raise DomainError("下标集合的 j、l 必须非负", details={"j": self.j, "l": self.l})

    @classmethod
    def square(cls, order: int) -> "GridIndexSet":
        return cls(j=order, l=order)

    @property
    def size(self) -> int:
        return (self.j + 1) * (self.l + 1) - 1

    @property
    def radius(self) -> float:
        return math.hypot(self.j, self.l)

    def indices(self) -> List[Tuple[int, int]]:
        """按 w² + k² 递增（再按 w、k）排列的下标"""
        pairs = [(w, k) for w in range(self.j + 1) for k in range(self.l + 1) if (w, k) != (0, 0)]
        return sorted(pairs, key=lambda p: (p[0] * p[0] + p[1] * p[1], p[0], p[1]))

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.size
