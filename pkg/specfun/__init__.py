# -*- coding: utf-8 -*-
"""
实值特殊函数与自适应数值积分
"""

from .bessel import BesselKResult, bessel_j0, bessel_j0_zeros, bessel_k, bessel_k_ex
from .gamma import gamma, log_gamma, upper_incomplete_gamma
from .hypergeometric import hyp2f1_half
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, integrate, integrate_panels

__all__ = [
    'BesselKResult',
    'DEFAULT_QUADRATURE',
    'QuadratureSpec',
    'bessel_j0',
    'bessel_j0_zeros',
    'bessel_k',
    'bessel_k_ex',
    'gamma',
    'hyp2f1_half',
    'integrate',
    'integrate_panels',
    'log_gamma',
    'upper_incomplete_gamma',
]
