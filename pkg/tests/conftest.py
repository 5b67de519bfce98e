# -*- coding: utf-8 -*-
"""
Pytest配置文件
"""

import math
import sys
from pathlib import Path

import pytest

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from channel.params import NetworkParams, NoiseParams  # noqa: E402


@pytest.fixture
def canonical_params():
    """标准验证点：h=2.5、a=0.5、θ_h=π/3（β=4）、θ_f=π/2"""
    return NetworkParams(h=2.5, a=0.5, theta_h=math.pi / 3)


@pytest.fixture
def table_noise():
    """器件默认噪声参数"""
    return NoiseParams()


@pytest.fixture
def zero_noise():
    """无噪声（干扰受限）"""
    return NoiseParams(N0=0.0)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """测试不读取外部 ATTOCELL_CONFIG，并重置全局配置"""
    import config
    monkeypatch.delenv("ATTOCELL_CONFIG", raising=False)
    monkeypatch.setattr(config, "config", None)
