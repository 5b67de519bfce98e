#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
统一错误处理

数值内核只抛出 AttocellError 的子类；命令行入口通过 ErrorHandler
把异常转换为结构化日志和进程退出码。
"""

import traceback
import uuid
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

import structlog
from pydantic import ValidationError as PydanticValidationError

logger = structlog.get_logger(__name__)


class ErrorSeverity(Enum):
    """错误严重程度"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(Enum):
    """错误分类"""
    DOMAIN = "domain"
    CONVERGENCE = "convergence"
    CONFIGURATION = "configuration"
    VALIDATION = "validation"
    SYSTEM = "system"
    UNKNOWN = "unknown"


class ExitCode:
    """命令行退出码"""
    OK = 0
    VALIDATION_FAILED = 1
    USAGE_ERROR = 2
    NUMERICAL_FAILURE = 3


class AttocellError(Exception):
    """attocell 基础异常类"""

    def __init__(self, message: str, category: ErrorCategory = ErrorCategory.UNKNOWN,
                 severity: ErrorSeverity = ErrorSeverity.MEDIUM,
                 details: Optional[dict] = None, cause: Optional[Exception] = None):
        super().__init__(message)
        self.message = message
        self.category = category
        self.severity = severity
        self.details = details or {}
        self.cause = cause
        self.timestamp = datetime.now()
        self.trace_id = str(uuid.uuid4())[:8]

    def to_dict(self) -> dict:
        """转换为字典格式"""
        return {
            "message": self.message,
            "category": self.category.value,
            "severity": self.severity.value,
            "details": self.details,
            "timestamp": self.timestamp.isoformat(),
            "trace_id": self.trace_id,
            "cause": str(self.cause) if self.cause else None,
            "recovery_suggestions": self.get_recovery_suggestions()
        }

    def get_recovery_suggestions(self) -> List[str]:
        """获取错误恢复建议"""
        if self.category == ErrorCategory.DOMAIN:
            return [
                "检查参数是否在函数定义域内",
                "确认 θ_h 位于 (0, π/2)，θ_f 位于 (0, π/2]",
                "确认 h、a 等几何参数为正数"
            ]
        if self.category == ErrorCategory.CONVERGENCE:
            return [
                "放宽积分容差 (abs_tol / rel_tol)",
                "增大 max_depth",
                "降低截断阶数目标精度"
            ]
        if self.category in (ErrorCategory.CONFIGURATION, ErrorCategory.VALIDATION):
            return [
                "检查配置文件格式 (JSON 或 YAML)",
                "确认 method 与 order 字段一致",
                "确认扫描区间非空"
            ]
        return []


class DomainError(AttocellError):
    """参数超出定义域"""
    def __init__(self, message: str, details: Optional[dict] = None, cause: Optional[Exception] = None):
        super().__init__(message, ErrorCategory.DOMAIN, ErrorSeverity.MEDIUM, details, cause)


class ConvergenceError(AttocellError):
    """数值迭代或积分未收敛"""
    def __init__(self, message: str, details: Optional[dict] = None, cause: Optional[Exception] = None):
        super().__init__(message, ErrorCategory.CONVERGENCE, ErrorSeverity.HIGH, details, cause)


class ConfigurationError(AttocellError):
    """配置或命令行用法错误"""
    def __init__(self, message: str, details: Optional[dict] = None, cause: Optional[Exception] = None):
        super().__init__(message, ErrorCategory.CONFIGURATION, ErrorSeverity.HIGH, details, cause)


def exit_code_for(error: BaseException) -> int:
    """把异常映射为命令行退出码"""
    if isinstance(error, (ConfigurationError, DomainError, PydanticValidationError)):
        return ExitCode.USAGE_ERROR
    return ExitCode.NUMERICAL_FAILURE


class ErrorHandler:
    """错误处理器"""

    def __init__(self, max_history_size: int = 100):
        self.error_history: List[Dict[str, Any]] = []
        self.max_history_size = max_history_size

    def handle_error(
        self,
        error: Exception,
        context: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """处理错误并返回标准化的错误响应"""
        if isinstance(error, AttocellError):
            error_response = error.to_dict()
        else:
            error_response = self._handle_generic_error(error)

        if context:
            error_response["context"] = context
        error_response["exit_code"] = exit_code_for(error)

        self._log_error(error_response)
        self.error_history.append(error_response)
        if len(self.error_history) > self.max_history_size:
            self.error_history = self.error_history[-self.max_history_size:]

        return error_response

    def _handle_generic_error(self, error: Exception) -> Dict[str, Any]:
        """处理通用错误"""
        if isinstance(error, PydanticValidationError):
            wrapped = AttocellError(
                message="参数校验失败",
                category=ErrorCategory.VALIDATION,
                severity=ErrorSeverity.MEDIUM,
                details={"errors": [
                    {"loc": ".".join(str(p) for p in e["loc"]), "msg": e["msg"]}
                    for e in error.errors()
                ]},
                cause=error,
            )
        else:
            wrapped = AttocellError(
                message=str(error),
                category=ErrorCategory.SYSTEM,
                severity=ErrorSeverity.CRITICAL,
                details={
                    "original_type": type(error).__name__,
                    "traceback": traceback.format_exc()
                },
                cause=error,
            )
        return wrapped.to_dict()

    def _log_error(self, error_response: Dict[str, Any]) -> None:
        """按严重程度记录错误日志"""
        severity = error_response.get("severity", "medium")
        log = {
            "critical": logger.critical,
            "high": logger.error,
            "medium": logger.warning,
        }.get(severity, logger.info)
        log(
            error_response.get("message", "未知错误"),
            trace_id=error_response.get("trace_id"),
            category=error_response.get("category"),
            details=error_response.get("details"),
        )
