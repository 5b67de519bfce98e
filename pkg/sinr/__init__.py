# -*- coding: utf-8 -*-
"""
信干噪比（SINR）计算
"""

from .calculator import SinrResult, omega, sinr_1d, sinr_2d

__all__ = ['SinrResult', 'omega', 'sinr_1d', 'sinr_2d']
