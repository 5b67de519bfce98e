# -*- coding: utf-8 -*-
"""
信道模型：Lambertian 增益、视场约束与系统参数
"""

from .gain import channel_gain, fov_indicator, fov_mask, path_loss_term
from .params import HALF_PI, DerivedOptics, NetworkParams, NoiseParams, lambertian_order

__all__ = [
    'HALF_PI',
    'DerivedOptics',
    'NetworkParams',
    'NoiseParams',
    'channel_gain',
    'fov_indicator',
    'fov_mask',
    'lambertian_order',
    'path_loss_term',
]
