# -*- coding: utf-8 -*-
"""
一维/二维 LED 网络的同频干扰：格点求和、Poisson 闭式近似与有限视场变体
"""

from .field1d import (
    choose_k_1d,
    closed_form_1d,
    error_diagnostics_1d,
    fov_thresholds_1d,
    g_term_1d,
    interference_1d,
    interference_constant_1d,
    interference_fov_1d,
    interference_fov_oracle_1d,
    interference_oracle_1d,
    q0_fov_1d,
    q_fov_1d,
    spectrum_1d,
)
from .field2d import (
    choose_jl_2d,
    closed_form_2d,
    error_diagnostics_2d,
    fov_thresholds_2d,
    g_term_2d,
    interference_2d,
    interference_constant_2d,
    interference_fov_2d,
    interference_fov_oracle_2d,
    interference_oracle_2d,
    q00_fov_2d,
    q_fov_2d,
    row_sum_oracle_2d,
    spectrum_2d,
)
from .results import (
    ErrorDiagnostics,
    FieldPoint,
    FovInclusion,
    GridIndexSet,
    InterferenceMethod,
    InterferenceResult,
)

__all__ = [
    'ErrorDiagnostics',
    'FieldPoint',
    'FovInclusion',
    'GridIndexSet',
    'InterferenceMethod',
    'InterferenceResult',
    'choose_jl_2d',
    'choose_k_1d',
    'closed_form_1d',
    'closed_form_2d',
    'error_diagnostics_1d',
    'error_diagnostics_2d',
    'fov_thresholds_1d',
    'fov_thresholds_2d',
    'g_term_1d',
    'g_term_2d',
    'interference_1d',
    'interference_2d',
    'interference_constant_1d',
    'interference_constant_2d',
    'interference_fov_1d',
    'interference_fov_2d',
    'interference_fov_oracle_1d',
    'interference_fov_oracle_2d',
    'interference_oracle_1d',
    'interference_oracle_2d',
    'q00_fov_2d',
    'q0_fov_1d',
    'q_fov_1d',
    'q_fov_2d',
    'row_sum_oracle_2d',
    'spectrum_1d',
    'spectrum_2d',
]
