# -*- coding: utf-8 -*-
"""
图表数据绑定

每个 id 绑定一组固定的场景参数，重新生成对应曲线的数据序列。
未特别说明时：h=2.5 m、a=0.5 m、θ_h=π/3（β=4）、θ_f=π/2。
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

from cli.scenario import OutputSpec, ScenarioConfig
from utils.error_handler import ConfigurationError

_DIAGONAL_STEP = math.sqrt(2.0) * 0.01


@dataclass(frozen=True)
class FigureBinding:
    """图表 id 与场景参数"""
    figure_id: str
    summary: str
    scenario: Dict[str, Any] = field(default_factory=dict)

    def build(self, output: OutputSpec = None, threads: int = 1) -> ScenarioConfig:
        data = dict(self.scenario)
        data["output"] = output or OutputSpec()
        data["threads"] = threads
        return ScenarioConfig.model_validate(data)


FIGURES: Dict[str, FigureBinding] = {
    binding.figure_id: binding for binding in [
        FigureBinding(
            "one-dim-interferers",
            "一维：干扰随单侧干扰源数 n=1..50 饱和（oracle，z=a/2=0.25）",
            {"model": "1d", "method": "oracle", "at": {"z": 0.25},
             "sweep": {"param": "n", "lo": 1, "hi": 50, "step": 1}},
        ),
        FigureBinding(
            "one-dim-a-sweep",
            "一维：a=0.1..0.98 步长 0.04，闭式 k=1，接收机位于小区边缘 z=a/2",
            {"model": "1d", "method": "closed_form", "order": {"k": 1}, "relative_position": 0.5,
             "sweep": {"param": "a", "lo": 0.1, "hi": 0.98, "step": 0.04}},
        ),
        FigureBinding(
            "one-dim-h-sweep",
            "一维：h=2.5..5 步长 0.1，闭式 k=1，z=0.25（a=0.5 时的小区边缘）",
            {"model": "1d", "method": "closed_form", "order": {"k": 1}, "at": {"z": 0.25},
             "sweep": {"param": "h", "lo": 2.5, "hi": 5.0, "step": 0.1}},
        ),
        FigureBinding(
            "one-dim-hpsa-sweep",
            "一维：θ_h=0.3..1.485 步长 0.015（80 点，不含 π/2），闭式 k=1，z=0.25",
            {"model": "1d", "method": "closed_form", "order": {"k": 1}, "at": {"z": 0.25},
             "sweep": {"param": "hpsa", "lo": 0.3, "hi": 1.485, "step": 0.015}},
        ),
        FigureBinding(
            "one-dim-z-sweep",
            "一维：z=0..0.25 步长 0.01，闭式 k=1",
            {"model": "1d", "method": "closed_form", "order": {"k": 1},
             "sweep": {"param": "z", "lo": 0.0, "hi": 0.25, "step": 0.01}},
        ),
        FigureBinding(
            "one-dim-fov-sweep",
            "一维：θ_f=0.1..1.57 步长 0.01，有限视场闭式 k=16，z=0",
            {"model": "1d", "method": "fov_closed_form", "order": {"k": 16}, "at": {"z": 0.0},
             "sweep": {"param": "fov", "lo": 0.1, "hi": 1.57, "step": 0.01}},
        ),
        FigureBinding(
            "two-dim-interferers",
            "二维：方形窗口半宽 n=1..100（oracle，角点 (0.25, 0.25)）",
            {"model": "2d", "method": "oracle", "at": {"dx": 0.25, "dy": 0.25},
             "sweep": {"param": "n", "lo": 1, "hi": 100, "step": 1}},
        ),
        FigureBinding(
            "two-dim-a-sweep",
            "二维：a=0.1..1 步长 0.01，闭式 (j,l)=(1,1)，角点 (a/2, a/2)",
            {"model": "2d", "method": "closed_form", "order": {"jl": [1, 1]}, "relative_position": 0.5,
             "sweep": {"param": "a", "lo": 0.1, "hi": 1.0, "step": 0.01}},
        ),
        FigureBinding(
            "two-dim-h-sweep",
            "二维：h=2.5..5 步长 0.1，闭式 (1,1)，角点 (0.25, 0.25)",
            {"model": "2d", "method": "closed_form", "order": {"jl": [1, 1]},
             "at": {"dx": 0.25, "dy": 0.25},
             "sweep": {"param": "h", "lo": 2.5, "hi": 5.0, "step": 0.1}},
        ),
        FigureBinding(
            "two-dim-hpsa-sweep",
            "二维：θ_h=0.3..1.485 步长 0.015（80 点），闭式 (1,1)，角点 (0.25, 0.25)",
            {"model": "2d", "method": "closed_form", "order": {"jl": [1, 1]},
             "at": {"dx": 0.25, "dy": 0.25},
             "sweep": {"param": "hpsa", "lo": 0.3, "hi": 1.485, "step": 0.015}},
        ),
        FigureBinding(
            "two-dim-z-sweep",
            "二维：沿对角线 z=√2·0.01·j（j=0..25，dx=dy=z/√2），闭式 (1,1)",
            {"model": "2d", "method": "closed_form", "order": {"jl": [1, 1]},
             "sweep": {"param": "z", "lo": 0.0, "hi": 25.5 * _DIAGONAL_STEP, "step": _DIAGONAL_STEP}},
        ),
        FigureBinding(
            "two-dim-fov-sweep",
            "二维：θ_f=0.1..1.57 步长 0.01，有限视场闭式 (1,1)，(0, 0)",
            {"model": "2d", "method": "fov_closed_form", "order": {"jl": [1, 1]},
             "at": {"dx": 0.0, "dy": 0.0},
             "sweep": {"param": "fov", "lo": 0.1, "hi": 1.57, "step": 0.01}},
        ),
    ]
}


def figure_ids() -> List[str]:
    return list(FIGURES)


def get_figure(figure_id: str) -> FigureBinding:
    try:
        return FIGURES[figure_id]
    except KeyError:
        raise ConfigurationError(
            f"未知的图表 id: {figure_id}",
            details={"figure_id": figure_id, "supported": figure_ids()},
        )


def figure_help() -> str:
    """argparse 帮助文本：列出全部 id 及其参数"""
    return "\n".join(f"  {b.figure_id:<22} {b.summary}" for b in FIGURES.values())
