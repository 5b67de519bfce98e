#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
attocell 工具包
提供日志配置与统一错误处理
"""

from .error_handler import (
    AttocellError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    ErrorCategory,
    ErrorHandler,
    ErrorSeverity,
    ExitCode,
    exit_code_for,
)
from .logger import get_logger, set_log_level, setup_logging

__all__ = [
    'AttocellError',
    'ConfigurationError',
    'ConvergenceError',
    'DomainError',
    'ErrorCategory',
    'ErrorHandler',
    'ErrorSeverity',
    'ExitCode',
    'exit_code_for',
    'get_logger',
    'set_log_level',
    'setup_logging',
]

__version__ = '1.0.0'
