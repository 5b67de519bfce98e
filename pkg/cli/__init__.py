# -*- coding: utf-8 -*-
"""
attocell 命令行：场景配置、参数扫描、图表数据与验证报告
"""

from .commands import cmd_figure, cmd_interference, cmd_sinr, cmd_validate
from .scenario import ModelKind, OrderSpec, OutputFormat, OutputSpec, ScenarioConfig, SweepParam, SweepSpec

__all__ = [
    'ModelKind',
    'OrderSpec',
    'OutputFormat',
    'OutputSpec',
    'ScenarioConfig',
    'SweepParam',
    'SweepSpec',
    'cmd_figure',
    'cmd_interference',
    'cmd_sinr',
    'cmd_validate',
]
